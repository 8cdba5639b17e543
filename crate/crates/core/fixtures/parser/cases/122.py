#!/usr/bin/env python
while False: import collections,pandas.x
text = 'import fake_10'
from pandas.core.request import client as pd; y = 2
