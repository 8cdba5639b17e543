#!/usr/bin/env python
import yaml.client
from .sys.x import path, b_c
from requests.request.path import core as ux, request as ux, request, Thing as pd
s = f'{1 + 1} import not_real'
