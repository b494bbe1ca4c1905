"""Monomial normal forms and the Boettcher coordinate of a few series."""

from powsemi import bottcher, compose, equals, monomial_normalizer, parse_series

for text in ["z^2 + z^3", "2*z^2", "zeta(3)*z^3 + (1/2)*z^4", "z^2 + z^4 + z^6"]:
    A = parse_series(text)
    norm = monomial_normalizer(A, 12)
    check = equals(compose(A, norm.beta), compose(norm.beta, norm.normal_form()))
    print(text)
    print(f"    beta        = {norm.beta}")
    print(f"    normal form = {norm.normal_form()}  [{check}]")
    print(f"    boettcher   = {bottcher(A, 12)}")
