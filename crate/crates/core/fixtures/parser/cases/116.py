#!/usr/bin/env python
from ..urllib.core import pyplot
s = f'{1 + 1} import not_real'
raw = r'\import' + b'from x import y'.decode()
