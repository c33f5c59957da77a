"""A small scripting language for ideal computations.

The surface syntax follows the interactive sessions of common computer
algebra systems: ``S = QQ[x, y, z]`` declares a ring and binds its
variables, ``saturate(I, x)`` calls a builtin, ``trim phi I`` applies
functions by juxtaposition, and a trailing ``;`` suppresses output.

>>> print(run_source('''
... S = QQ[x, y, z];
... I = ideal(x^5+y^3+z^3, x^3+y^5+z^3, x^3+y^3+z^5);
... degree(I : saturate(I))
... '''), end="")
27
"""

from .evaluator import Evaluator, OutputRecord, evaluate, run_source
from .golden import compare
from .lexer import ScriptSyntaxError, tokenize
from .parser import parse
from .printer import format_expr, format_script
from .values import ScriptRuntimeError

__all__ = [
    "parse", "tokenize", "format_script", "format_expr", "evaluate", "run_source",
    "Evaluator", "OutputRecord", "compare", "ScriptSyntaxError", "ScriptRuntimeError",
]
