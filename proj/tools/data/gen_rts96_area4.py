"""Regenerates the rts96-area4 builtin edge list.

Area 4 reuses the 24-bus RTS area template (buses 401-424, double circuits
merged, unit susceptances) plus three tie buses in Area 3. Line directions
follow a DC power flow solved with nominal generation and load.
"""
import numpy as np

lines = [(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 9), (3, 24), (4, 9), (5, 10),
         (6, 10), (7, 8), (8, 9), (8, 10), (9, 11), (9, 12), (10, 11), (10, 12),
         (11, 13), (11, 14), (12, 13), (12, 23), (13, 23), (14, 16), (15, 16),
         (15, 21), (15, 24), (16, 17), (16, 19), (17, 18), (17, 22), (18, 21),
         (19, 20), (20, 23), (21, 22)]
load = {1: 108, 2: 97, 3: 180, 4: 74, 5: 71, 6: 136, 7: 125, 8: 171, 9: 175,
        10: 195, 13: 265, 14: 194, 15: 317, 16: 100, 18: 333, 19: 181, 20: 128}
gen = {1: 192, 2: 192, 7: 300, 13: 591, 15: 215, 16: 155, 18: 400, 21: 400,
       22: 300, 23: 660}
ties = [(7, "303", -60.0), (13, "315", 40.0), (23, "317", -80.0)]

names = [str(400 + b) for b in range(1, 25)] + [t[1] for t in ties]
idx = {n: i for i, n in enumerate(names)}
edges = [(str(400 + a), str(400 + b)) for a, b in lines]
edges += [(str(400 + a), t) for a, t, _ in ties]

inj = np.zeros(len(names))
scale = (sum(load.values()) - sum(t[2] for t in ties)) / sum(gen.values())
for b, g in gen.items():
    inj[idx[str(400 + b)]] += g * scale
for b, l in load.items():
    inj[idx[str(400 + b)]] -= l
for _, t, p in ties:
    inj[idx[t]] += p

n = len(names)
B = np.zeros((n, n))
for a, b in edges:
    i, j = idx[a], idx[b]
    B[i, i] += 1; B[j, j] += 1; B[i, j] -= 1; B[j, i] -= 1
slack = idx["413"]
keep = [i for i in range(n) if i != slack]
theta = np.zeros(n)
theta[keep] = np.linalg.solve(B[np.ix_(keep, keep)], inj[keep] / 100.0)

directed = []
for a, b in edges:
    d = theta[idx[a]] - theta[idx[b]]
    assert abs(d) > 1e-9, (a, b)
    directed.append((a, b) if d > 0 else (b, a))

outdeg = {v: 0 for v in names}
indeg = {v: 0 for v in names}
for h, t in directed:
    outdeg[h] += 1; indeg[t] += 1
for v in names:
    role = "source" if indeg[v] == 0 else "sink" if outdeg[v] == 0 else "interior"
    flags = []
    if v.startswith("4"):
        b = int(v) - 400
        if b in gen: flags.append("gen")
        if b in load: flags.append("load")
    else:
        flags.append("pin")
    print("vertex", v, role, *flags)
for h, t in directed:
    print("edge", h, t, "b=1")
