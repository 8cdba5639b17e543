s = f'{1 + 1} import not_real'
try: import json.request.path
except Exception: pass
from pandas.x import client
pass
import collections
