#!/usr/bin/env python
for i in []: import mod9.request
with ctx: import requests.pyplot.client as np
import bs4.client ,  pandas
# import commented_out
import six.request, bs4.pyplot as pd, bs4.parse
text = 'import fake_80'
