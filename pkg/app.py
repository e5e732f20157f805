"""
Entry point for the arcspline command line.

Usage: python app.py info polygon.json
       python app.py smooth polygon.json --objective all --degrees
"""

from arcspline.cli import main

if __name__ == "__main__":
    main()
