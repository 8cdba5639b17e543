#!/usr/bin/env python
import matplotlib; y = 2
import json, numpy.request.core; y = 2
