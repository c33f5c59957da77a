"""The scripting language, driven from Python and from the command line.

Run with ``python demos/04_scripts.py``.  The same sessions run from a shell:

    idealkit corpus/bezout.m2l
    idealkit corpus/fano_schemes.m2l --check corpus/fano_schemes.expected
"""

from pathlib import Path

from idealkit.script import evaluate, format_script, parse, run_source

print(run_source("""
S = QQ[x, y, z];
I = ideal(x^5+y^3+z^3, x^3+y^5+z^3, x^3+y^3+z^5);
degree(I : saturate(I))
"""))

# Maps between rings, kernels and permutations of variables.
print(run_source("""
PP4 = QQ[a, b, c, d, e];
determinantal = minors(2, matrix{{a, c, d}, {b, d, e}})
sigma = map(PP4, PP4, matrix{{d, e, a, c, b}});
sigma determinantal
"""))

# Records keep the evaluated values, not just the text.
recs = evaluate("R = ZZ[x, y, z];\nsaturate(ideal(x+y+z, x^2+y^2+z^2, x^3+y^3+z^3), x)\n")
I = recs[0].value
print("over ZZ:", I, "| unit?", I.is_unit())

# The printer is the parser's inverse.
corpus = Path(__file__).resolve().parent.parent / "corpus"
src = (corpus / "classic_blowup.m2l").read_text()
print(format_script(parse(src)))
