"""Coverage-diversity analytics for news reporting.

Ingests a news-article CSV into an immutable store, derives per-article
keywords, typed entities, and emotion style vectors, and serves retrieval,
similarity fusion, clustering, and 2-D ordination over HTTP for the
linked-view frontend.
"""

__version__ = "0.1.0"
