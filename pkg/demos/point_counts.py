"""Count points of the WS3 graph hypersurface over small prime fields and
fit the counts by a polynomial in q."""

from graphyps.families import wheel
from graphyps.pointcount import count_projective, fit_count_polynomial, validate
from graphyps.poly import psi_det

psi = psi_det(wheel(3))
recs = [count_projective(psi, q, graph_id="WS3") for q in (2, 3, 5, 7, 11)]
for r in recs:
    print(f"q={r.q:3d}  projective points {r.projective_count}")

fit = fit_count_polynomial(recs)
terms = [f"{c}*q^{i}" for i, c in enumerate(fit.coefficients) if c]
print("fit:", " + ".join(reversed(terms)), "| integral:", fit.integral)

held = count_projective(psi, 13)
print(f"q=13 predicted {fit(13)}, counted {held.projective_count}, match={validate(fit, [held])}")
