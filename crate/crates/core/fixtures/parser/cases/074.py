#!/usr/bin/env python
import pandas.path
x = 1; import _private.client.client,matplotlib
import six,kazoo as np,matplotlib.pyplot
