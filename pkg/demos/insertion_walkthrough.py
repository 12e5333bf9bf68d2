"""Column insertion step by step, P-RS, and its inverse through Psi.

Run:  python3 demos/insertion_walkthrough.py
"""
from pknuth import from_partition, hat, hat_chain, hat_word, inverse_prs, phi, prs, psi, stair
from pknuth.insertion import one_a_positions
from pknuth.tableaux import render
from pknuth.words import des_p, format_word

P = from_partition(stair(8), 9)
w = (9, 8, 7, 5, 6, 3, 2, 4, 1)
print(f"order {P!r}, word {format_word(w, '')}\n")

d, beta, tr = phi(P, w, trace=True)
for s in tr.steps:
    extra = f" (h,q)={s.hq}" if s.hq else ""
    print(f"  p={s.p} case {s.case}{extra} -> column ({format_word(s.chain)})")
print(f"first column ({format_word(d)}), leftover ({format_word(beta)})\n")

# Psi over the hatted order undoes that step
X = {len(w) + 1 - i for i in one_a_positions(w, beta)}
back = psi(hat(P), X, hat_word(beta, P.n), hat_chain(d, P.n))
print(f"Psi_X with X={sorted(X)} gives back {back == (hat_chain((), P.n), hat_word(w, P.n))}\n")

r = prs(P, w)
print("PT\n" + render(r.pt_columns))
print("QT\n" + render(r.qt_columns))
print(f"des_P(w) = {sorted(des_p(P, w))}; {{9 - x}} = {sorted(9 - x for x in des_p(P, w))}")
print("inverse gives back w:", inverse_prs(P, r.pt_columns, r.qt_columns) == w)
