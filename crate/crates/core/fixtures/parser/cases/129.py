#!/usr/bin/env python
from numpy.pyplot.parse import *
raw = r'\import' + b'from x import y'.decode()
import urllib.parse as np ,  json
def func_60(a, b=1):
    text = 'import fake_70'
    f = lambda x: x + 1
    from os.pyplot.parse import b_c, pyplot as plt
import numpy as plt ,  urllib.core as pd ,  json.path as np
