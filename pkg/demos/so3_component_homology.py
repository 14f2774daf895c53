"""Components of commuting tuples in SO(3) and the homology they carry.

Commuting tuples either share an axis (one big component containing the
trivial tuple) or generate the Klein four-group of diagonal sign matrices,
in which case the component is pinned down by the tuple up to relabeling
the three involutions.  Counting components, tabulating where the face
maps send them, and running Smith normal form on the alternating sums
yields the second homology of the commuting classifying space.
"""

from kocom import D4Element, boundary_matrix, enumerate_components, face_map, h2_bcom_so3
from kocom.commuting import classify_component, component_complex, component_homology

print("component counts by tuple length")
for n in range(4):
    labels = enumerate_components(n)
    print(f"  n={n}: {len(labels)}")

print()
print("the seven exotic triple components (canonical representatives)")
for label in enumerate_components(3):
    if label.exotic:
        print(f"  {label}")

print()
print("faces of the exotic triples: -> identity-axis or exotic pair component")
I, C1, C2, C3 = D4Element.I, D4Element.C1, D4Element.C2, D4Element.C3
for triple in ((C1, C2, C2), (C2, C2, C3), (C1, C2, C3)):
    name = "(" + ",".join(str(e) for e in triple) + ")"
    images = []
    for i in range(4):
        face = classify_component(face_map(i, triple))
        images.append("exotic" if face.exotic else "axis")
    print(f"  {name}: " + " ".join(f"d{i}->{img}" for i, img in enumerate(images)))

print()
print("boundary matrices (columns = components, canonical order)")
print(f"  level 2 -> 1: {boundary_matrix(2)}")
print(f"  level 3 -> 2: {boundary_matrix(3)}")

print()
complex_ = component_complex()
print(f"degree-2 homology of the component complex: {component_homology(2)}")
print(f"plus the Z/2 from the fundamental group:    {h2_bcom_so3()}")
