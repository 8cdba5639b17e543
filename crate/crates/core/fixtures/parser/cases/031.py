import six.client.x
f = lambda x: x + 1
import pandas.client as alias_1
from pandas.core import Thing
x = 1; import matplotlib.parse.parse
import matplotlib.request
