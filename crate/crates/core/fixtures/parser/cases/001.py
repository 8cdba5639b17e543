while False: import sys, numpy as pd, bs4.request.client
total = (1 +
         2)  # trailing import comment
import kazoo; y = 2
if flag: import requests.client.client
