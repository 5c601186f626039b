"""Regenerates status.txt: every catalog entry of rank <= 8 with its verdict.

Open cases: su(p,q) with p or q > 1, so(p,p+2) with
p odd or p = 2, u*(2m+1,H) = so*(4m+2) with m >= 1, and EIII. Everything else
is surjective.
"""

from pathlib import Path

MAX_RANK = 8
B = 2 * MAX_RANK + 3
rows = []


def add(name, rank, is_open):
    if rank <= MAX_RANK:
        rows.append((name, "Open" if is_open else "Surjective"))


for n in range(2, B + 1):
    add(f"sl({n},R)", n - 1, False)
    add(f"sl({n},H)", 2 * n - 1, False)
    add(f"su({n})", n - 1, False)
    add(f"sl({n},C)", n - 1, False)
for p in range(1, B + 1):
    for q in range(p, B + 1):
        add(f"su({p},{q})", p + q - 1, p > 1 or q > 1)
        add(f"sp({p},{q})", p + q, False)
        if p + q >= 5:
            add(f"so({p},{q})", (p + q) // 2, q == p + 2 and (p % 2 == 1 or p == 2))
for n in range(5, B + 1):
    add(f"so({n})", n // 2, False)
    add(f"so({n},C)", n // 2, False)
for m in range(4, B + 1, 2):
    add(f"sp({m},R)", m // 2, False)
    add(f"sp({m},C)", m // 2, False)
for n in range(2, B + 1):
    add(f"sp({n})", n, False)
for m in range(6, B + 1, 2):
    add(f"so*({m})", m // 2, m % 4 == 2)
for name in ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G",
             "e6", "e7", "e8", "f4", "g2", "E6(C)", "E7(C)", "E8(C)", "F4(C)", "G2(C)"]:
    rows.append((name, "Open" if name == "EIII" else "Surjective"))

with open(Path(__file__).with_name("status.txt"), "w") as f:
    for name, verdict in sorted(set(rows)):
        f.write(f"{name} {verdict}\n")
