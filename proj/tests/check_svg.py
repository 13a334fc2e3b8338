"""Render through the CLI and check the SVG parses as XML with the expected element counts."""
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET

NS = "{http://www.w3.org/2000/svg}"


def render(binary, spec, sets):
    with tempfile.NamedTemporaryFile(suffix=".svg", delete=False) as f:
        out = f.name
    subprocess.run([binary, "render", spec, "--sets", sets, "-o", out], check=True, stdout=subprocess.DEVNULL)
    root = ET.parse(out).getroot()
    polylines = root.findall(f".//{NS}polyline")
    circles = root.findall(f".//{NS}circle")
    cusps = [c for c in circles if c.get("class", "").startswith("cusp")]
    points = [c for c in circles if c.get("class", "").startswith("point")]
    return len(polylines), len(cusps), len(points)


def main():
    binary, curves = sys.argv[1], sys.argv[2]
    cases = [
        ("mixed_harmonics.json", "m,wigner,cwms,sms", (4, 19, 0)),
        ("circle.json", "m,sms", (1, 0, 1)),
        ("ellipse_2_1.json", "m,sms", (2, 4, 0)),
        ("constant_width_3.json", "m,cwms", (1, 0, 1)),
    ]
    failed = 0
    for spec, sets, want in cases:
        got = render(binary, f"{curves}/{spec}", sets)
        status = "ok" if got == want else "MISMATCH"
        failed += got != want
        print(f"{spec:24s} {sets:20s} polylines/cusps/points = {got} expected {want} {status}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
