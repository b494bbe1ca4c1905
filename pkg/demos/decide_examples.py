"""Decide a handful of small semigroups and print the certificates."""

from powsemi import decide, parse_series

CASES = [
    ["z^2", "zeta(5)*z^3"],
    ["z^2", "z^2 + z^3"],
    ["2*z^2"],
    ["2*z^2", "2*z^3"],
    ["z^2 + z^3", "z^2 + z^3 + z^5"],
]

for texts in CASES:
    gens = [parse_series(t, semigroup=True) for t in texts]
    verdict = decide(gens, 16, 6)
    print(f"<{', '.join(texts)}>")
    if verdict.kind == "NotAmenable":
        print(f"    NotAmenable: {verdict.certificate}")
    elif verdict.kind == "Amenable":
        print(f"    Amenable: {verdict.witness.words} ({verdict.witness.status})")
    else:
        print(f"    Inconclusive: {verdict.reason}")
