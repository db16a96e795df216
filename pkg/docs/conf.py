# -*- coding: utf-8 -*-
#
# permuton documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'permuton'
copyright = u'2026, The permuton developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'permutondoc'

man_pages = [
    ('index', 'permuton', u'permuton Documentation',
     [u'The permuton developers'], 1)
]
