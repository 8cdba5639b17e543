#!/usr/bin/env python
pass
for i in []: import matplotlib.request.client ,  six ,  collections.pyplot.parse
