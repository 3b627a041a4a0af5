"""
Ground-state degeneracy on closed surfaces
==========================================

Each genus inserts one handle object H = sum_i i* x i. The ground-state
degeneracy is the unit multiplicity of H^g fused with the merged defects.
"""

import numpy as np

from fuscat import catalog
from fuscat.category_data import ObjectClass
from fuscat.fact_homology import SurfaceSpec, fh_closed_surface, handle_object
from fuscat.fp_dimension import fpdims

for cid in ["toric_code", "ising", "fibonacci"]:
    emb = catalog.embedding(cid)
    d = fpdims(emb.target.ring)
    D = np.sqrt(d.category_dim)
    print(cid, "H =", handle_object(emb))
    for g in range(5):
        gsd = fh_closed_surface(emb, SurfaceSpec(genus=g)).gsd
        verlinde = np.sum((D / d.dims) ** (2 * g - 2))
        print(f"  g={g}: {gsd:4d}   sum (D/d_i)^(2g-2) = {verlinde:.6f}")

###############################################################################
# Punctures on the sphere: sigma, sigma has a single ground state, a lone
# eps has none.

emb = catalog.embedding("ising")
R = emb.target.ring
sig, eps = ObjectClass.simple(R, "sigma"), ObjectClass.simple(R, "eps")
for defects in [(sig, sig), (eps,), (sig, sig, sig, sig)]:
    res = fh_closed_surface(emb, SurfaceSpec(defects=defects))
    print([str(x) for x in defects], "->", res.gsd)

res = fh_closed_surface(emb, SurfaceSpec(genus=1, defects=(sig, sig)))
print("\n".join(res.derivation_log))
