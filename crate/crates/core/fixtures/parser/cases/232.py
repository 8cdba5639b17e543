from __future__ import print_function
while False: import urllib.client as alias_1 ,  collections.core ,  i3.path.pyplot
from pandas import pyplot, parse; y = 2
def func_37(a, b=1):
    text = 'import fake_89'
    import pandas.parse.parse ,  mod9.parse ,  yaml; y = 2
    import six.path.client ,  kazoo.pyplot ,  collections as ux
    import os.path.pyplot
    text = 'import fake_19'
    try: import urllib as pd
    except Exception: pass
