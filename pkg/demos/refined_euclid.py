# Reducing bases of Z^2 with R1 = [[1,1],[0,1]] and R2 = [[1,0],[1,1]]
#
# A row matrix [[x1, x2], [y1, y2]] stands for the basis a' = x1 a + x2 b,
# b' = y1 a + y2 b.  A word w carries it home when eval(w) @ X.T = I.

import numpy as np

from torelli import euclid, linalg

x = ((7, 3), (2, 1))
word = euclid.reduce_full(x)
print("full reduction of", x, "->", word.to_json())
print("check:", linalg.matmul(word.matrix(), linalg.transpose(x)))

# The refined reduction stays inside <R1^2, R2>.  It needs nu(a') = 0 and
# nu(b') = 1 for the torus form nu(a) = 0, nu(b) = 1.

x = ((3, 1), (2, 1))
red = euclid.reduce_refined_trace(x)
print("refined reduction of", x, "->", red.word.to_json())
for step, cols in enumerate(red.trace):
    (p, r), (q, s) = cols
    print(f"  step {step}: a' = ({p}, {q}), b' = ({r}, {s}), nu = {euclid.nu_value(p, q)}, {euclid.nu_value(r, s)}")

# -I needs the four-letter endgame.

print("-I ->", euclid.reduce_refined(((-1, 0), (0, -1))).to_json())

# A basis failing the parity condition is refused.

try:
    euclid.reduce_refined(((1, 0), (1, 1)))
except ValueError as exc:
    print("refused:", exc)

# Word lengths on random inputs stay far below |x1| + |y1| + 8.

rng = np.random.default_rng(1)
worst = 0
for _ in range(1000):
    x = euclid.random_sl2(rng, 10, refined=True)
    worst = max(worst, euclid.reduce_refined_trace(x).iterations - euclid.descent_bound(x))
print("largest (iterations - bound) over 1000 samples:", worst)
