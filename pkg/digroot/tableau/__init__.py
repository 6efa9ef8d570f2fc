from .tableau import render_text
