from __future__ import print_function
raw = r'\import' + b'from x import y'.decode()
total = (1 +
         2)  # trailing import comment
value = {'a': 1, 'import': 2}[
    'a']
f = lambda x: x + 1
