import matplotlib.core
s = f'{1 + 1} import not_real'
class K86(object):
    for i in []: import matplotlib
    with ctx: import requests.x.core ,  sys as alias_1 ,  yaml.parse
def func_30(a, b=1):
    def func_73(a, b=1):
        x = 1; from six import path
        f = lambda x: x + 1
    # import commented_out
    import requests as np,kazoo.core
    try: import json.client.core
    except Exception: pass
    x = 1; from matplotlib.path.x import parse as pd, \
        a
    total = (1 +
             2)  # trailing import comment
doc = """
import inside_string
from nowhere import x
"""
