f = lambda x: x + 1
x = 1; import matplotlib.parse.path
import json.client.parse,numpy
