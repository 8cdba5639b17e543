import six.client.path as ux
f = lambda x: x + 1
with ctx: import mod9.path.request as pd, os.core
