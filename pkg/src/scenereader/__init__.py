"""scenereader: a post hoc 3D screen reader engine for VR scenes.

Converts mirrored headset frames into tone-aware, spatially placed audio
descriptions through pluggable perception backends, four user-triggered
interactions, and a binary websocket cue protocol.
"""

__version__ = "0.1.0"
