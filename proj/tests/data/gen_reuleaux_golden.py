"""Golden support values of the canonical Reuleaux triangle (d = 1).

The triangle has vertices A=(0,0), B=(1,0), C=(1/2, sqrt(3)/2). Its boundary
alternates arcs and vertices; by outward normal angle t:
  [0, pi/3]      arc centered at A    h = 1
  [pi/3, 2pi/3]  vertex C             h = cos(t - pi/3)
  [2pi/3, pi]    arc centered at B    h = 1 + cos t
  [pi, 4pi/3]    vertex A             h = 0
  [4pi/3, 5pi/3] arc centered at C    h = 1 + cos(t - pi/3)
  [5pi/3, 2pi]   vertex B             h = cos t
Evaluated in 50-digit arithmetic; 64 angles per regime.
"""
import mpmath as mp

mp.mp.dps = 50
pi = mp.pi


def h(t):
    if t <= pi / 3:
        return mp.mpf(1)
    if t <= 2 * pi / 3:
        return mp.cos(t - pi / 3)
    if t <= pi:
        return 1 + mp.cos(t)
    if t <= 4 * pi / 3:
        return mp.mpf(0)
    if t <= 5 * pi / 3:
        return 1 + mp.cos(t - pi / 3)
    return mp.cos(t)


rows = []
for i in range(64):  # closed regime [0, pi/3]
    rows.append(("d", pi / 3 * i / 63))
for i in range(64):  # closed regime [pi, 4pi/3]
    rows.append(("zero", pi + pi / 3 * i / 63))
for i in range(32):  # open regime (pi/3, pi)
    rows.append(("inside", pi / 3 + (2 * pi / 3) * (i + 1) / 33))
for i in range(32):  # open regime (4pi/3, 2pi)
    rows.append(("inside", 4 * pi / 3 + (2 * pi / 3) * (i + 1) / 33))

with open("reuleaux_golden.csv", "w") as f:
    f.write("regime,t,h\n")
    for regime, t in rows:
        f.write(f"{regime},{mp.nstr(t, 20)},{mp.nstr(h(t), 20)}\n")
