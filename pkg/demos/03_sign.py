"""The sign relating zero-colored wreath values to S_rn values."""

from ribbonrep import chi_sn, d_r_distance, enumerate_par_r, partitions, psi_zero_colored, sign2_closed, sign_r, sign_report

rep = sign_report((5, 5, 4, 3, 1), 3)
print(rep.dumps())

# the sign is a parity of adjacent swaps, hence d_r
for lam in enumerate_par_r(2, 3):
    print(f"{str(lam):>12}  d_2={d_r_distance(lam, 2)}  sign={sign_r(lam, 2):+d}  closed={sign2_closed(lam):+d}")

# the identity itself, for one shape and every cycle type
lam, r = (5, 4, 2, 1), 2
for mu in partitions(6):
    scaled = tuple(r * m for m in mu)
    print(mu, psi_zero_colored(lam, mu, r), "==", sign_r(lam, r), "*", chi_sn(lam, scaled))
