"""Safe evaluation of polynomial expressions such as ``tau2^2*tau3 - 3*tau2 + 1``.

Expressions are parsed with :mod:`ast` and evaluated against a namespace of
ring values; ``^`` is accepted as exponentiation.
"""

import ast

from .errors import MalformedSpec

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def evaluate(text, names, integer):
    """Evaluate ``text`` with identifiers from ``names``.

    ``integer`` converts integer literals into values of the target ring, so
    arithmetic never silently happens in Python ints.
    """
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise MalformedSpec(f"cannot parse expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return integer(node.value)
        if isinstance(node, ast.Name):
            try:
                return names[node.id]
            except KeyError:
                raise MalformedSpec(f"unknown name {node.id!r} in {text!r}") from None
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -ev(node.operand)
            if isinstance(node.op, ast.UAdd):
                return ev(node.operand)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = _literal_exponent(node.right, text)
                return ev(node.left) ** e
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(ev(node.left), ev(node.right))
        raise MalformedSpec(f"unsupported syntax in {text!r}")

    return ev(tree)


def _literal_exponent(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and node.value >= 0:
        return node.value
    raise MalformedSpec(f"exponents must be non-negative integer literals in {text!r}")
