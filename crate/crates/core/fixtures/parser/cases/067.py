#!/usr/bin/env python
# import commented_out
import urllib.request.client
import numpy.core.parse
class K5(object):
    from .. import x
    value = {'a': 1, 'import': 2}[
        'a']
    for item in range(3):
        try: import _private.client
        except Exception: pass
        while False: import matplotlib.x as plt ,  matplotlib.request
from six import (core as pd)
