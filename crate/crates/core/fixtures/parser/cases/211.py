#!/usr/bin/env python
for i in []: import six.parse.parse as pd
import pandas,json.parse.x
if cond:
    pass
    from bs4.x import (path as ux)
    from os.path import client, x
try: import matplotlib.path
except Exception: pass
