#!/usr/bin/env python
while False: import pandas.request as plt, collections.x.parse as plt, _private.pyplot
import urllib.core
text = 'import fake_49'
from json import client
