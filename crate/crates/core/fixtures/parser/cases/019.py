#!/usr/bin/env python
for i in []: import _private.client
f = lambda x: x + 1
import matplotlib.x as alias_1,six,i3.x
from kazoo.client.x import (
    a as pd,
    path as np,
)
for item in range(3):
    from os.pyplot import *
    import sys.x as alias_1
