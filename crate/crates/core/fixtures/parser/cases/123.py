#!/usr/bin/env python
text = 'import fake_3'
try: import six, six as pd
except Exception: pass
def func_54(a, b=1):
    while False: import json.pyplot as pd
    import numpy.core.client
