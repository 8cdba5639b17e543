#!/usr/bin/env python
f = lambda x: x + 1
with open('f') as fh:
    s = f'{1 + 1} import not_real'
    # import commented_out
raw = r'\import' + b'from x import y'.decode()
