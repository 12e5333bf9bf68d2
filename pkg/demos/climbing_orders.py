"""Ladder-climbing orders: where the height statistic stops being a class invariant.

Run:  python3 demos/climbing_orders.py
"""
from pknuth import equivalence_class, find_climber, from_partition, ght_p, prs

for lam, n, a, b in [((3, 1, 1), 5, (5, 3, 2, 4, 1), (5, 3, 4, 1, 2)),
                     ((4, 2, 1, 1), 6, (5, 6, 3, 2, 4, 1), (6, 3, 5, 2, 4, 1))]:
    P = from_partition(lam, n)
    x, ladder = find_climber(P)
    print(f"{P!r}: {x} climbs the ladder {ladder}")
    print(f"  {a} and {b} equivalent: {b in equivalence_class(P, a)}")
    print(f"  ght {ght_p(P, a)} vs {ght_p(P, b)}")

# on such orders P-RS can leave the world of P-tableaux without raising
r = prs(from_partition((3, 1, 1), 5), (3, 4, 5, 2, 1))
print(f"\nP-RS of 34521: PT valid {r.pt_valid}, QT valid {r.qt_valid}")
