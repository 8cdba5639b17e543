#!/usr/bin/env python
raw = r'\import' + b'from x import y'.decode()
s = f'{1 + 1} import not_real'
