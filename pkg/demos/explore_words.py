"""Enumerate words in two pairs of generators, one with a relation and one free."""

from powsemi import enumerate_words, free_pair_evidence, parse_series

for texts in (["z^2", "-z^2"], ["z^2", "z^2 + z^3"]):
    gens = [parse_series(t, semigroup=True) for t in texts]
    table = enumerate_words(gens, 4, 16)
    print(f"<{', '.join(texts)}>: {len(table.listing)} words, {len(table.entries)} distinct values")
    print(f"    {free_pair_evidence(gens[0], gens[1], 4, 16)}")
