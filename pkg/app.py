"""
app.py

Command-line entrypoint for the palindromic density toolkit

Usage:
    python app.py pd 5 10
    python app.py verify --max-n 8 --max-b 6
    python app.py grid 2 50 2 50 --out surface.csv
    python app.py converge 4 --parity even --k-max 400
    python app.py profiles 5 10
    python app.py sample 5 10 --draws 100000 --seed 7
"""

from cli import main

if __name__ == "__main__":
    raise SystemExit(main())
