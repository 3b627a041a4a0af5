"""
Internal hom over a base
========================

For an embedding E -> C the internal hom [m, n]_E is the object of E whose
multiplicity at e counts maps T(e) x m -> n.
"""

from fuscat import catalog
from fuscat.category_data import ObjectClass, fuse, identity_embedding, vec_embedding
from fuscat.enriched_hom import enriched_hom, internal_hom_dual_swap, tensor_shift_check

ising = catalog.load("ising").ribbon
emb = vec_embedding(ising)
R = ising.ring
one, sigma = ObjectClass.unit(R), ObjectClass.simple(R, "sigma")

res = enriched_hom(emb, one, fuse(sigma, sigma))
print(res.base_class, res.hom_dim, res.unit_consistent)

###############################################################################
# Over a nontrivial base the answer is a genuine object of E.

rep = catalog.load("rep_z2").ribbon
emb = identity_embedding(rep)
one, psi = ObjectClass.unit(rep.ring), ObjectClass.simple(rep.ring, "psi")
print("[1, psi]_E =", enriched_hom(emb, one, psi).base_class)
print("[1, 1 + psi]_E =", enriched_hom(emb, one, one + psi).base_class)

# sanity identities hold at the level of classes
print(internal_hom_dual_swap(emb, one, psi))
print(tensor_shift_check(emb, one + psi, psi))
