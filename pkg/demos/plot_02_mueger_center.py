"""
Monodromy and the Muger center
==============================

Which simples braid trivially with everything? Compare a modular category
with a symmetric one, then classify a few embeddings.
"""

import numpy as np

from fuscat import catalog
from fuscat.braiding import centralizer, classify, monodromy, mueger_center
from fuscat.category_data import BaseEmbedding, vec_embedding
from fuscat.fp_dimension import fpdims

np.set_printoptions(precision=3, suppress=True)

toric = catalog.load("toric_code").ribbon
d = fpdims(toric.ring)
S = monodromy(toric, d)
print(S.entries.real)

# e and m are mutual semions, so nothing but 1 is transparent
print("Muger center:", [toric.ring.simples[i] for i in mueger_center(S, d)])
print("centralizer of {1, e}:", sorted(toric.ring.simples[i] for i in centralizer(S, d, ["1", "e"])))

###############################################################################
# sVec is symmetric, its whole monodromy is d_i d_j.

svec = catalog.load("svec").ribbon
ds = fpdims(svec.ring)
print(monodromy(svec, ds).entries.real)
print(classify(vec_embedding(svec)))

###############################################################################
# Ising over Vec is modular. Rep(Z/2) -> Ising via psi -> eps is not an
# embedding into the Muger center: eps braids with sigma.

ising = catalog.load("ising").ribbon
print(classify(vec_embedding(ising)))
rep = catalog.load("rep_z2").ribbon
c = classify(BaseEmbedding.from_labels(rep, ising, {"1": "1", "psi": "eps"}))
print(c.is_over_base, c.failed_flags())
for note in c.notes:
    print(" ", note)
