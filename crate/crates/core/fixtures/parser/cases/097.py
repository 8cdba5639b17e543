try:
    import yaml
    raw = r'\import' + b'from x import y'.decode()
    for i in []: import bs4 as pd
except ImportError:
    total = (1 +
             2)  # trailing import comment
    for item in range(3):
        for i in []: import pandas.core,urllib
        from _private.pyplot import (Thing)
    try: import mod9.pyplot as alias_1
    except Exception: pass
    import bs4,pandas.path,os
    import collections.request; y = 2
import os.parse as alias_1 ,  os ,  matplotlib.request
text = 'import fake_92'
value = {'a': 1, 'import': 2}[
    'a']
import matplotlib.client.request
