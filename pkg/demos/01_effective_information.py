"""How much does one output tell you about the input?

A memoryless system is a row-stochastic matrix: row x is the output
distribution after forcing the input to x. Observing an output y turns the
prior over inputs into a posterior (the actual repertoire); the KL
divergence from prior to posterior is the effective information of y,
in bits. Sharp outputs (small posterior support) carry many bits, fuzzy
outputs carry few.
"""
import numpy as np

from effinfo import (
    Alphabet,
    Channel,
    Distribution,
    actual_repertoire,
    effective_information,
    output_distribution,
)


def show(m, prior, title):
    print(f"\n== {title} ==")
    out = output_distribution(m, prior)
    for y, p_y in zip(m.output.labels, out.probs):
        if p_y == 0.0:
            print(f"  {y}: unreachable")
            continue
        rep = actual_repertoire(m, prior, y)
        ei = effective_information(m, prior, y)
        posterior = ", ".join(f"{x}:{p:.3f}" for x, p in zip(m.input.labels, rep.probs))
        print(f"  {y}: p = {p_y:.3f}  ei = {ei:.3f} bits  posterior ({posterior})")


inputs = Alphabet(["x0", "x1", "x2", "x3"])
uniform = Distribution.uniform(inputs)

# a perfect discriminator: each input goes to its own output
identity = Channel(inputs, Alphabet(["y0", "y1", "y2", "y3"]), np.eye(4))
show(identity, uniform, "identity system: every output pins down its input")

# a system that only distinguishes {x0,x1} from {x2,x3}
coarse = Channel(inputs, Alphabet(["lo", "hi"]),
                 [[1, 0], [1, 0], [0, 1], [0, 1]])
show(coarse, uniform, "coarse split: each output rules out half the inputs")

# a noisy system: outputs overlap, so each is worth less than a clean bit
noisy = Channel(inputs, Alphabet(["lo", "hi"]),
                [[0.9, 0.1], [0.8, 0.2], [0.25, 0.75], [0.1, 0.9]])
show(noisy, uniform, "noisy split: overlapping likelihoods dilute the bits")

# the uniform prior is the maximum-entropy baseline, but any prior works
skewed = Distribution(inputs, [0.7, 0.1, 0.1, 0.1])
show(identity, skewed, "identity with a skewed prior: rare inputs surprise more")
