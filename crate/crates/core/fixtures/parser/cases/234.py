#!/usr/bin/env python
from pandas import (pyplot, request)
with ctx: import json.x
for item in range(3):
    import _private.client.core
    def func_88(a, b=1):
        import matplotlib.request, pandas.parse
        total = (1 +
                 2)  # trailing import comment
