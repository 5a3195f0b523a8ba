import random

from hypothesis import strategies as st

from quasiwords.term import ALL_OPS, BASIC_OPS, E, Leaf, Node

GENERATORS = ("a", "b", "c", "x1")

ACCEPTANCE_LINES: list[str] = []


def terms(ops=ALL_OPS, names=GENERATORS, with_e=False, max_leaves=12):
    leaf = st.sampled_from([Leaf(n) for n in names])
    if with_e:
        leaf = leaf | st.just(E)
    return st.recursive(
        leaf,
        lambda kids: st.builds(Node, st.sampled_from(ops), kids, kids),
        max_leaves=max_leaves,
    )


basic_terms = terms(ops=BASIC_OPS)


def random_term(rng: random.Random, n_leaves: int, ops=ALL_OPS, names=GENERATORS):
    if n_leaves == 1:
        return Leaf(rng.choice(names))
    k = rng.randint(1, n_leaves - 1)
    return Node(rng.choice(ops), random_term(rng, k, ops, names),
                random_term(rng, n_leaves - k, ops, names))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
