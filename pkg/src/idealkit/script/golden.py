"""Compare script output with an expected-output file.

Expected files hold one record per line; blank lines and lines starting with
``#`` are ignored.  A line of the form ``ideal ...`` is parsed in the ring of
the actual value and compared by ideal equality; every other line must match
the printed output exactly.
"""

from ..ideals import Ideal, ideal_equals


def expected_records(text):
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((lineno, s))
    return out


def split_top_level(text):
    """Split on commas not nested in parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_ideal_text(text, ring):
    """``ideal (f, g)`` / ``ideal f`` / ``ideal 1`` as an :class:`Ideal` of ``ring``."""
    body = text.strip()
    if not body.startswith("ideal"):
        raise ValueError(f"not an ideal: {text!r}")
    body = body[len("ideal"):].strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    gens = [g for g in split_top_level(body) if g]
    return Ideal(ring, [ring.parse(g) for g in gens])


def compare(records, expected_text):
    """Mismatch messages (empty when the output matches)."""
    expected = expected_records(expected_text)
    problems = []
    for k, ((lineno, want), rec) in enumerate(zip(expected, records), 1):
        if want.startswith("ideal") and isinstance(rec.value, Ideal):
            try:
                ref = parse_ideal_text(want, rec.value.ring)
            except (ValueError, KeyError) as e:
                problems.append(f"record {k} (expected line {lineno}): cannot read expected ideal: {e}")
                continue
            if not ideal_equals(rec.value, ref):
                problems.append(f"record {k} (expected line {lineno}): ideals differ\n"
                                f"  expected: {want}\n  actual:   {rec.text}")
        elif rec.text != want:
            problems.append(f"record {k} (expected line {lineno}): output differs\n"
                            f"  expected: {want}\n  actual:   {rec.text}")
    if len(records) != len(expected):
        problems.append(f"expected {len(expected)} output records, got {len(records)}")
    return problems
