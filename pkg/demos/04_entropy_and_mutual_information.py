"""Shannon entropy and mutual information as averaged effective information.

A copy system maps each symbol to its primed twin, so observing an output
collapses the posterior to a single input; the bits generated equal the
surprise -log2 p(x). Averaging over outputs gives the entropy of the prior.
For an arbitrary noisy channel, the same average equals the mutual
information between input and output.
"""
import random

from effinfo import (
    Alphabet,
    Distribution,
    copy_channel,
    effective_information,
    expected_effective_information,
    mutual_information,
    output_distribution,
    shannon_entropy,
)
from effinfo.instances import random_channel, random_prior

alphabet = Alphabet(["sun", "rain", "snow", "fog"])
prior = Distribution(alphabet, [0.5, 0.25, 0.125, 0.125])
copy = copy_channel(alphabet)

print("copy system: each output is worth the surprise of its input")
for x in alphabet.labels:
    ei = effective_information(copy, prior, x + "'")
    print(f"  seeing {x + chr(39):7s} generates {ei:.3f} bits  (p({x}) = {prior.prob(x)})")

h = shannon_entropy(prior)
avg = expected_effective_information(copy, prior)
print(f"\nentropy H = {h:.6f} bits")
print(f"average bits per observation = {avg:.6f}  -> identical")

print("\nnoisy channels: the same average recovers mutual information")
rng = random.Random(4)
for trial in range(5):
    m = random_channel(rng, rng.randint(2, 6), rng.randint(2, 6))
    p = random_prior(rng, m.input)
    lhs = expected_effective_information(m, p)
    rhs = mutual_information(m, p)
    print(f"  {m.input.size}x{m.output.size} channel: "
          f"E[ei] = {lhs:.9f}   MI = {rhs:.9f}   gap = {abs(lhs - rhs):.1e}")

print("\nintuition: MI is what an average output tells you about the input;")
print("effective information is what one particular output tells you.")
m = random_channel(rng, 4, 3)
p = random_prior(rng, m.input)
out = output_distribution(m, p)
print(f"\nper-output breakdown for a random 4x3 channel (MI = "
      f"{mutual_information(m, p):.4f} bits):")
for y, p_y in zip(m.output.labels, out.probs):
    print(f"  {y}: p = {p_y:.3f}  ei = {effective_information(m, p, y):.4f} bits")
