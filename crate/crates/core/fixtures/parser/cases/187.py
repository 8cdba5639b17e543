#!/usr/bin/env python
from yaml.parse import Thing
from pandas.x import client, Thing, core as pd, b_c as ux
x = 1; from i3 import (
    path as ux,
    client as plt,
    a,
    b_c as ux,
)
raw = r'\import' + b'from x import y'.decode()
