from .. bs4.x import parse, b_c, path as pd, parse
value = {'a': 1, 'import': 2}[
    'a']
