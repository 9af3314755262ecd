"""Deterministic synthetic researcher corpora for tests and demos.

Profiles are sampled from hand-written topic vocabularies so the resulting
map has honest cluster structure: researchers from one area share words,
bridge researchers mix two pools. Everything is driven by one stdlib
``random.Random(seed)``, so a (parameters, seed) pair pins the corpus
exactly; no file, network or clock input.
"""

from __future__ import annotations

import random

from .profiles import ProfileSet, Publication, ResearcherProfile

AREAS: dict[str, dict] = {
    "machine learning": {
        "words": """
            learning neural network gradient optimization training inference
            representation embedding classifier regression generalization
            transformer attention convolutional recurrent supervised
            unsupervised reinforcement policy reward bandit kernel bayesian
            posterior likelihood regularization dropout pruning distillation
            benchmark dataset label annotation augmentation calibration
        """,
        "keywords": [
            "deep learning", "representation learning", "reinforcement learning",
            "probabilistic models", "optimization", "transfer learning",
        ],
        "department": "Machine Learning",
    },
    "systems": {
        "words": """
            kernel scheduler filesystem concurrency throughput latency cache
            memory allocator virtualization container runtime compiler
            distributed consensus replication fault tolerance transaction
            storage persistence logging profiling instrumentation deployment
            cluster microservice serverless orchestration pipeline batching
        """,
        "keywords": [
            "operating systems", "distributed systems", "compilers",
            "cloud computing", "storage systems", "performance engineering",
        ],
        "department": "Computer Systems",
    },
    "theory": {
        "words": """
            algorithm complexity hardness approximation randomized proof bound
            lattice combinatorial polynomial reduction conjecture theorem
            graph matching flow cut sparsification streaming sublinear sketch
            entropy coding duality convexity spectral eigenvalue random walk
            markov chain mixing counting sampling derandomization oracle
        """,
        "keywords": [
            "algorithms", "computational complexity", "graph theory",
            "approximation algorithms", "randomized algorithms", "combinatorics",
        ],
        "department": "Theoretical Computer Science",
    },
    "visualization": {
        "words": """
            visualization interactive scatterplot chart encoding perception
            color layout projection dimensionality exploration dashboard
            overview detail zoom brushing linking narrative storytelling
            glyph heatmap treemap graph drawing animation transition
            usability insight analytics provenance annotation rendering
        """,
        "keywords": [
            "information visualization", "visual analytics", "human perception",
            "interactive systems", "data storytelling", "graph drawing",
        ],
        "department": "Data Visualization",
    },
    "hci": {
        "words": """
            interaction interface usability accessibility participant study
            survey interview ethnography prototype wireframe gesture touch
            haptic wearable ubiquitous mobile crowdsourcing collaboration
            awareness notification attention cognitive workload affect
            trust privacy consent moderation community social behavior
        """,
        "keywords": [
            "human-computer interaction", "accessibility", "social computing",
            "user studies", "ubiquitous computing", "design methods",
        ],
        "department": "Human-Centered Computing",
    },
    "robotics": {
        "words": """
            robot manipulation grasping locomotion planning trajectory control
            actuator sensor lidar odometry localization mapping navigation
            dynamics kinematics impedance compliance teleoperation autonomy
            drone vehicle swarm formation obstacle avoidance calibration
            simulation gazebo hardware embedded realtime perception
        """,
        "keywords": [
            "robot manipulation", "motion planning", "autonomous vehicles",
            "robot perception", "control theory", "field robotics",
        ],
        "department": "Robotics",
    },
    "security": {
        "words": """
            security vulnerability exploit malware intrusion detection
            cryptography encryption signature protocol authentication
            authorization sandbox isolation fuzzing symbolic taint analysis
            forensics anonymity censorship phishing botnet firewall patch
            disclosure attestation enclave sidechannel mitigation hardening
        """,
        "keywords": [
            "systems security", "applied cryptography", "network security",
            "software security", "privacy enhancing technologies", "program analysis",
        ],
        "department": "Cybersecurity",
    },
    "databases": {
        "words": """
            database query optimizer index join relational transactional
            isolation snapshot schema migration warehouse analytics columnar
            compression partitioning sharding materialized view workload
            benchmark provenance lineage cleaning integration deduplication
            entity resolution knowledge graph ontology semantic
        """,
        "keywords": [
            "database systems", "query optimization", "data integration",
            "data cleaning", "knowledge graphs", "data provenance",
        ],
        "department": "Data Management",
    },
    "networks": {
        "words": """
            network routing congestion protocol packet switching bandwidth
            wireless spectrum cellular mesh topology measurement telemetry
            middlebox proxy multipath datacenter backbone peering latency
            jitter loss throughput tcp quic dns cdn anycast multicast
            programmable dataplane offload
        """,
        "keywords": [
            "computer networks", "network measurement", "wireless networks",
            "datacenter networking", "network protocols", "internet architecture",
        ],
        "department": "Networked Systems",
    },
    "bioinformatics": {
        "words": """
            genome sequencing alignment variant assembly annotation protein
            folding structure expression transcriptome regulatory pathway
            phylogenetic evolution mutation epigenetic microbiome cohort
            clinical biomarker drug docking molecule screening simulation
            population statistical genetic association heritability
        """,
        "keywords": [
            "computational biology", "genomics", "protein structure",
            "systems biology", "biomedical informatics", "statistical genetics",
        ],
        "department": "Computational Biology",
    },
}

# connective tissue so stopword filtering has something to chew on
_GLUE = """
    the of a an and for with in on to we our this that is are from by using
    toward under over between across more most very than then how when
""".split()

_FILLER = """
    approach method framework model system analysis evaluation result
    experiment implementation design novel robust scalable efficient
    practical empirical theoretical measurement comparison baseline
    improvement tradeoff challenge limitation future direction application
    case real world deployment open source tool library community impact
    quality performance accuracy error metric score significant extensive
""".split()

_FIRST_NAMES = """
    ada alan alice amara andrei bilal camille chen daria dmitri elena emeka
    fatima felix grace hana hiro ines ivan jamal jin kaoru lara leonard lin
    malik mei mikhail nadia noor olga pavel priya rafael rosa sanjay sofia
    tariq uma victor wei xin yara yusuf zoe
""".split()

_LAST_NAMES = """
    abara bennett chen dubois eriksen fischer garcia haddad ivanova jensen
    kowalski larsen moreau nakamura okafor petrov quispe rahman santos tanaka
    ueda vasquez weber xu yamamoto zhang ahmed brandt costa dimitrov egede
    farouk gupta hansen iversen johansson kim laurent mbeki novak osei patel
    rossi suzuki tran
""".split()

_POSITIONS = [
    "Professor",
    "Associate Professor",
    "Assistant Professor",
    "Research Scientist",
    "Postdoctoral Fellow",
    "Senior Lecturer",
]

_INSTITUTE = "Example Institute of Technology"


def _sentence(rng: random.Random, pools: list[list[str]], weights: list[int], length: int) -> str:
    words = []
    for i in range(length):
        if i % 4 == 3:
            words.append(rng.choice(_GLUE))
        else:
            pool = rng.choices(pools, weights=weights, k=1)[0]
            words.append(rng.choice(pool))
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def _make_publication(rng: random.Random, pools, weights, year_low: int, year_high: int) -> Publication:
    title = _sentence(rng, pools, weights, rng.randint(7, 12))[:-1]
    sentences = [
        _sentence(rng, pools, weights, rng.randint(12, 22))
        for _ in range(rng.randint(4, 7))
    ]
    return Publication(
        title=title,
        abstract=" ".join(sentences),
        year=rng.randint(year_low, year_high),
        num_citations=int(rng.expovariate(1.0 / 35.0)),
    )


def make_profile_set(
    n_researchers: int,
    pubs_per_researcher: int = 100,
    seed: int = 42,
    source_label: str = "synthetic demo corpus",
    n_empty: int = 0,
) -> ProfileSet:
    """Sample a researcher corpus. ``n_empty`` appends researchers with no
    publications and no keywords, for exercising the insufficient-data
    paths all the way to the UI."""
    rng = random.Random(seed)
    area_names = list(AREAS)
    area_words = {name: AREAS[name]["words"].split() for name in area_names}

    researchers = []
    used_ids: set[str] = set()
    for i in range(n_researchers):
        primary = area_names[i % len(area_names)]
        pools = [area_words[primary], _FILLER]
        weights = [7, 3]
        if rng.random() < 0.25:  # bridge researcher spanning two areas
            secondary = rng.choice([a for a in area_names if a != primary])
            pools = [area_words[primary], area_words[secondary], _FILLER]
            weights = [5, 3, 2]

        name = f"{rng.choice(_FIRST_NAMES).capitalize()} {rng.choice(_LAST_NAMES).capitalize()}"
        rid = name.lower().replace(" ", "-")
        while rid in used_ids:
            rid = f"{rid}-{rng.randrange(10, 100)}"
        used_ids.add(rid)

        publications = tuple(
            _make_publication(rng, pools, weights, 1998, 2025)
            for _ in range(pubs_per_researcher)
        )
        keyword_pool = list(AREAS[primary]["keywords"])
        rng.shuffle(keyword_pool)
        keywords = tuple(keyword_pool[: rng.randint(3, 5)])

        researchers.append(
            ResearcherProfile(
                id=rid,
                name=name,
                affiliation=f"School of {AREAS[primary]['department']}, {_INSTITUTE}",
                position=rng.choice(_POSITIONS),
                total_citations=sum(p.num_citations for p in publications) + rng.randrange(200),
                scholar_url=f"https://scholar.example.org/profile/{rid}",
                keywords=keywords,
                publications=publications,
            )
        )

    for j in range(n_empty):
        rid = f"silent-researcher-{j + 1}"
        researchers.append(
            ResearcherProfile(
                id=rid,
                name=f"Silent Researcher {j + 1}",
                affiliation=_INSTITUTE,
                position="Visiting Scholar",
                total_citations=0,
                scholar_url=f"https://scholar.example.org/profile/{rid}",
                keywords=(),
                publications=(),
            )
        )

    return ProfileSet(researchers=tuple(researchers), source_label=source_label)
