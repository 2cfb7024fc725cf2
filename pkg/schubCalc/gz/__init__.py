"Gelfand-Zetlin polytopes: lattice patterns, Kogan faces, Demazure characters, volumes and degrees."

from .patterns import (
    Weight,
    GZPattern,
    as_weight,
    weyl_dimension,
    gz_lattice_points,
    projection_pi,
)
from .faces import (
    KoganFace,
    kogan_face_word,
    is_reduced_face,
    face_permutation,
    face_dimension,
    enumerate_reduced_kogan_faces,
    face_lattice_points,
    face_volume,
)
from .characters import (
    FormalCharacter,
    lattice_character,
    character_is_symmetric,
    demazure_points,
    demazure_character,
    demazure_dimension,
    ehrhart_series,
    ehrhart_degree,
)
from .volume import (
    gz_volume_polynomial,
    volume_estimate,
    kp_pairing,
    kp_duality_matrix,
    flag_schubert_degree,
)
