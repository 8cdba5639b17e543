"""Generates the import-extraction differential corpus.

Each case is a random but valid Python 3 file. Its golden file lists every
import statement found by the standard `ast` module, in source order, so
the Rust extractor can be checked against an independent parser.

Usage: python3 generate.py [count]   (run from this directory)
"""
import ast
import json
import os
import random
import sys

SEED = 20261018
NAMES = ["os", "sys", "json", "requests", "numpy", "kazoo", "bs4", "i3", "yaml",
         "matplotlib", "pandas", "six", "urllib", "collections", "_private", "mod9"]
SUBS = ["client", "path", "pyplot", "parse", "request", "core", "x"]
ALIASES = ["np", "pd", "plt", "ux", "alias_1"]


def dotted(rng):
    parts = [rng.choice(NAMES)]
    for _ in range(rng.choice([0, 0, 1, 1, 2])):
        parts.append(rng.choice(SUBS))
    return ".".join(parts)


def plain_import(rng):
    items = []
    for _ in range(rng.choice([1, 1, 1, 2, 3])):
        item = dotted(rng)
        if rng.random() < 0.3:
            item += " as " + rng.choice(ALIASES)
        items.append(item)
    sep = rng.choice([", ", ",", " ,  "])
    return "import " + sep.join(items)


def from_import(rng):
    level = rng.choice([0, 0, 0, 1, 2])
    module = dotted(rng) if level == 0 or rng.random() < 0.6 else ""
    prefix = "." * level
    if rng.random() < 0.12 and level == 0:
        return "from %s import *" % module
    names = []
    for _ in range(rng.choice([1, 1, 2, 4])):
        name = rng.choice(SUBS + ["a", "b_c", "Thing"])
        if rng.random() < 0.25:
            name += " as " + rng.choice(ALIASES)
        names.append(name)
    head = "from %s%s%s import " % (prefix, "" if level == 0 else rng.choice(["", " "]), module)
    head = head.replace("from  ", "from ")
    style = rng.random()
    if style < 0.2:
        return head + "(\n    " + ",\n    ".join(names) + ",\n)"
    if style < 0.35:
        return head + "(" + ", ".join(names) + ")"
    if style < 0.45 and len(names) > 1:
        return head + names[0] + ", \\\n    " + ", ".join(names[1:])
    return head + ", ".join(names)


def an_import(rng):
    return plain_import(rng) if rng.random() < 0.5 else from_import(rng)


def distractor(rng, ind):
    choice = rng.randrange(9)
    if choice == 0:
        return ind + "text = 'import fake_%d'" % rng.randrange(100)
    if choice == 1:
        return ind + 'doc = """\n' + "import inside_string\nfrom nowhere import x\n" + '"""'
    if choice == 2:
        return ind + "# import commented_out"
    if choice == 3:
        return ind + "value = {'a': 1, 'import': 2}[\n" + ind + "    'a']"
    if choice == 4:
        return ind + "f = lambda x: x + 1"
    if choice == 5:
        return ind + "s = f'{1 + 1} import not_real'"
    if choice == 6:
        return ind + "raw = r'\\import' + b'from x import y'.decode()"
    if choice == 7:
        return ind + "total = (1 +\n" + ind + "         2)  # trailing import comment"
    return ind + "pass"


def block(rng, depth, ind):
    lines = []
    for _ in range(rng.randint(2, 6)):
        r = rng.random()
        if r < 0.35:
            imp = an_import(rng)
            if rng.random() < 0.15:
                imp = "x = 1; " + imp
            elif rng.random() < 0.1:
                imp = imp + "; y = 2"
            lines.append(ind + imp.replace("\n", "\n" + ind))
        elif r < 0.5 and depth < 3:
            kind = rng.randrange(6)
            inner = ind + "    "
            if kind == 0:
                lines.append(ind + "def func_%d(a, b=1):" % rng.randrange(100))
            elif kind == 1:
                lines.append(ind + "if cond:")
            elif kind == 2:
                lines.append(ind + "try:")
                lines.extend(block(rng, depth + 1, inner))
                lines.append(ind + "except ImportError:")
            elif kind == 3:
                lines.append(ind + "class K%d(object):" % rng.randrange(100))
            elif kind == 4:
                lines.append(ind + "for item in range(3):")
            else:
                lines.append(ind + "with open('f') as fh:")
            lines.extend(block(rng, depth + 1, inner))
        elif r < 0.6:
            head = rng.choice(["if flag", "while False", "try", "with ctx", "for i in []"])
            simple = plain_import(rng)
            if head == "try":
                lines.append(ind + "try: " + simple)
                lines.append(ind + "except Exception: pass")
            else:
                lines.append(ind + head + ": " + simple)
        else:
            lines.append(distractor(rng, ind))
    return lines


def golden(tree):
    nodes = [n for n in ast.walk(tree) if isinstance(n, (ast.Import, ast.ImportFrom))]
    nodes.sort(key=lambda n: (n.lineno, n.col_offset))
    out = []
    for n in nodes:
        if isinstance(n, ast.Import):
            for a in n.names:
                out.append({"module_path": a.name, "relative_level": 0, "line": n.lineno,
                            "module_alias": a.asname, "imported_names": [], "is_star": False})
        else:
            star = any(a.name == "*" for a in n.names)
            out.append({"module_path": n.module or "", "relative_level": n.level, "line": n.lineno,
                        "module_alias": None,
                        "imported_names": [] if star else [[a.name, a.asname] for a in n.names],
                        "is_star": star})
    return out


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 240
    rng = random.Random(SEED)
    os.makedirs("cases", exist_ok=True)
    os.makedirs("golden", exist_ok=True)
    for i in range(count):
        lines = []
        if rng.random() < 0.3:
            lines.append("#!/usr/bin/env python")
        if rng.random() < 0.2:
            lines.append("from __future__ import print_function")
        lines.extend(block(rng, 0, ""))
        eol = "\r\n" if rng.random() < 0.1 else "\n"
        src = eol.join(lines) + eol
        tree = ast.parse(src)
        name = "%03d" % i
        with open(os.path.join("cases", name + ".py"), "w", newline="") as fh:
            fh.write(src)
        with open(os.path.join("golden", name + ".json"), "w") as fh:
            json.dump(golden(tree), fh, indent=1)
            fh.write("\n")


if __name__ == "__main__":
    main()
