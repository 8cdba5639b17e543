#!/usr/bin/env python
for i in []: import json.pyplot as ux, collections as ux
while False: import json.parse.parse
for item in range(3):
    import json.core.path ,  urllib ,  json.core as np
    while False: import yaml as ux,requests.parse.core,six
    with ctx: import _private.parse as plt
    value = {'a': 1, 'import': 2}[
        'a']
    while False: import collections
while False: import requests.client, kazoo, matplotlib.core as alias_1
