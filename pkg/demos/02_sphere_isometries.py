"""
Constant-displacement isometries of round spheres
=================================================

The eigen-angle test: an orthogonal map moves every point of the sphere
by the same angle exactly when its symmetric part is a multiple of the
identity.  Lens-space generators show both outcomes.
"""

import numpy as np

from homoglab import (
    invariant_geodesic_check,
    is_clifford_sphere,
    is_free_on_sphere,
    lens_group,
    sphere_displacement_profile,
)

rng = np.random.default_rng(0)

# lens(8;1,1): both rotation blocks turn by the same angle
good = lens_group(8, (1, 1))[1]
ok, angle = is_clifford_sphere(good)
print("lens(8;1,1) generator constant displacement:", ok, f"angle {angle:.6f}")

# lens(5;1,2): the second block turns twice as fast, so points on the two
# core circles move by different amounts
bad = lens_group(5, (1, 2))[1]
ok, _ = is_clifford_sphere(bad)
prof = sphere_displacement_profile(bad, 2000, rng)
print(f"lens(5;1,2) generator constant displacement: {ok}")
print(f"  sampled displacement range [{prof.min:.4f}, {prof.max:.4f}], gap {prof.gap:.4f}")

# both cyclic groups act freely -- fixed points would need a +1 eigenvalue
for name, k, exps in [("lens(8;1,1)", 8, (1, 1)), ("lens(5;1,2)", 5, (1, 2))]:
    res = is_free_on_sphere(lens_group(k, exps))
    print(f"{name} acts freely: {res.free}")

# a constant-displacement map slides each great circle through x and gx
# along itself; verify on a random base point
x = rng.normal(size=4)
x /= np.linalg.norm(x)
print("\ngeodesic slide check on lens(8;1,1):", invariant_geodesic_check(good, x))
