import kazoo as pd
x = 1; import sys.request as ux, bs4.pyplot as plt, collections.x.pyplot
with ctx: import sys as pd
