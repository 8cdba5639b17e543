for i in []: import json.request
try: import pandas ,  requests
except Exception: pass
if cond:
    value = {'a': 1, 'import': 2}[
        'a']
    total = (1 +
             2)  # trailing import comment
    from bs4 import x, x as ux, Thing, a
