from __future__ import print_function
from .. mod9.request import b_c
for item in range(3):
    raw = r'\import' + b'from x import y'.decode()
    value = {'a': 1, 'import': 2}[
        'a']
    x = 1; import mod9 ,  mod9.core.request
    s = f'{1 + 1} import not_real'
    import _private.path
