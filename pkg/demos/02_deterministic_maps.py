"""Deterministic maps: pre-images, closed forms, and description length.

For a function table f the posterior given output y is uniform on the
pre-image f^-1(y), so effective information has the closed form
log2|X| - log2|f^-1(y)|. Pushing the uniform input distribution through f
gives each output probability |f^-1(y)| / |X|, and ei(f, y) is exactly
-log2 of that: the description length of y under the code induced by f.
"""
import math

from effinfo import (
    Alphabet,
    DeterministicMap,
    Distribution,
    actual_repertoire_det,
    channel_of_map,
    effective_information,
    effective_probability,
    ei_deterministic,
    preimage,
)

inputs = Alphabet([f"x{i}" for i in range(8)])
outputs = Alphabet(["A", "B", "C"])
# 5 inputs collapse onto A, 2 onto B, 1 onto C
f = DeterministicMap(inputs, outputs, ["A", "A", "A", "A", "A", "B", "B", "C"])

print("pre-images partition the 8 inputs:")
for y in outputs.labels:
    pre = sorted(preimage(f, y))
    print(f"  f^-1({y}) = {pre}")

print("\noutput probability and bits generated:")
for y in outputs.labels:
    p = effective_probability(f, y)
    ei = ei_deterministic(f, y)
    print(f"  {y}: p = {p} = {float(p):.4f}   ei = {ei:.4f} bits"
          f"   (-log2 p = {-math.log2(p):.4f})")

print("\nthe sharper the output, the more bits it carries:")
print(f"  C pins the input down completely: ei = {ei_deterministic(f, 'C'):.1f}"
      f" = log2 8")
print(f"  A leaves 5 of 8 candidates alive:  ei = {ei_deterministic(f, 'A'):.4f}")

# the closed form agrees with running the map through the channel pipeline
m = channel_of_map(f)
uniform = Distribution.uniform(inputs)
print("\nclosed form vs Bayes pipeline on the embedded 0/1 channel:")
for y in outputs.labels:
    closed = ei_deterministic(f, y)
    pipeline = effective_information(m, uniform, y)
    print(f"  {y}: {closed:.12f} vs {pipeline:.12f}")

rep = actual_repertoire_det(f, "B")
print("\nposterior after observing B is uniform on its pre-image:")
print("  " + ", ".join(f"{x}:{p:.3f}" for x, p in zip(inputs.labels, rep.probs)))
