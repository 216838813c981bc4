"""Smoke tests for the python bindings."""

import graphex

DOC = """graphex 1
kind simple
snapshot 0
node 1
node 2
edge 1 2
edge 2 1
end
"""


def test_canonicalize_roundtrip():
    assert graphex.canonicalize(DOC) == DOC
    assert graphex.kind_of(DOC) == "simple"


def test_convert_invert():
    image, chain = graphex.convert(DOC, "attributed")
    assert graphex.kind_of(image) == "attributed"
    assert "chain simple -> attributed" in chain
    assert graphex.invert(image, chain) == DOC


def test_order_and_plan():
    assert graphex.order("simple", "attributed") == "lessOrEqual"
    assert graphex.order("hyper,directed", "directed") == "equivalent"
    assert graphex.order("attributed", "simple") == "greaterOrEqual"
    assert "steps" in graphex.plan("hyper,directed", "attributed")
    assert graphex.subkind("simple", "directed")
    assert graphex.subkind("intattributed", "attributed")
    assert not graphex.subkind("directed", "simple")
    assert graphex.parse_kind("directed+attributed") == "directed,attributed"


def test_verify_fuzz():
    assert "multi_to_simple" in graphex.families()
    report = graphex.verify("multi_to_simple", fuzz=50, seed=3)
    assert report["ok"], report


def test_errors():
    try:
        graphex.canonicalize("graphex 1\nkind simple\nsnapshot 0\nedge 1 2\nend\n")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid document accepted")
    try:
        graphex.plan("attributed", "simple")
    except LookupError:
        pass
    else:
        raise AssertionError("impossible plan accepted")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")


if __name__ == "__main__":
    main()
