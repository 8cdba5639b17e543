#!/usr/bin/env python
import yaml.path as pd,matplotlib.path.path
while False: import requests.x
