#!/usr/bin/env python
from pandas.client import (parse)
try:
    if flag: import requests.x
    from numpy.path import client as ux, \
        parse
    x = 1; from kazoo import Thing as np, \
        client as plt, request, path
    import six,os,requests; y = 2
except ImportError:
    from . kazoo.pyplot import core as plt, core, parse, pyplot
    text = 'import fake_8'
    import collections as plt, requests.x, yaml
    s = f'{1 + 1} import not_real'
with ctx: import matplotlib.core ,  json
