//! Embedded 974-node spherical quadrature grid (order-26 Lebedev set).
//!
//! Node directions only; the associated quadrature weights are not needed
//! because the grid serves purely as a direction dictionary. Generated
//! offline from the standard Lebedev–Laikov tables and checked for unit
//! norm (max deviation ~1e-16) and for closure under the antipodal and
//! axis-swap symmetries of the set.

pub(crate) static LEBEDEV_974: [[f64; 3]; 974] = [
    [1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257],
    [0.04292963545341347, 0.04292963545341347, 0.9981553450238465],
    [-0.04292963545341347, 0.04292963545341347, 0.9981553450238465],
    [0.04292963545341347, -0.04292963545341347, 0.9981553450238465],
    [-0.04292963545341347, -0.04292963545341347, 0.9981553450238465],
    [0.04292963545341347, 0.04292963545341347, -0.9981553450238465],
    [-0.04292963545341347, 0.04292963545341347, -0.9981553450238465],
    [0.04292963545341347, -0.04292963545341347, -0.9981553450238465],
    [-0.04292963545341347, -0.04292963545341347, -0.9981553450238465],
    [0.04292963545341347, 0.9981553450238465, 0.04292963545341347],
    [-0.04292963545341347, 0.9981553450238465, 0.04292963545341347],
    [0.04292963545341347, -0.9981553450238465, 0.04292963545341347],
    [-0.04292963545341347, -0.9981553450238465, 0.04292963545341347],
    [0.04292963545341347, 0.9981553450238465, -0.04292963545341347],
    [-0.04292963545341347, 0.9981553450238465, -0.04292963545341347],
    [0.04292963545341347, -0.9981553450238465, -0.04292963545341347],
    [-0.04292963545341347, -0.9981553450238465, -0.04292963545341347],
    [0.9981553450238465, 0.04292963545341347, 0.04292963545341347],
    [-0.9981553450238465, 0.04292963545341347, 0.04292963545341347],
    [0.9981553450238465, -0.04292963545341347, 0.04292963545341347],
    [-0.9981553450238465, -0.04292963545341347, 0.04292963545341347],
    [0.9981553450238465, 0.04292963545341347, -0.04292963545341347],
    [-0.9981553450238465, 0.04292963545341347, -0.04292963545341347],
    [0.9981553450238465, -0.04292963545341347, -0.04292963545341347],
    [-0.9981553450238465, -0.04292963545341347, -0.04292963545341347],
    [0.1051426854086404, 0.1051426854086404, 0.9888832243546856],
    [-0.1051426854086404, 0.1051426854086404, 0.9888832243546856],
    [0.1051426854086404, -0.1051426854086404, 0.9888832243546856],
    [-0.1051426854086404, -0.1051426854086404, 0.9888832243546856],
    [0.1051426854086404, 0.1051426854086404, -0.9888832243546856],
    [-0.1051426854086404, 0.1051426854086404, -0.9888832243546856],
    [0.1051426854086404, -0.1051426854086404, -0.9888832243546856],
    [-0.1051426854086404, -0.1051426854086404, -0.9888832243546856],
    [0.1051426854086404, 0.9888832243546856, 0.1051426854086404],
    [-0.1051426854086404, 0.9888832243546856, 0.1051426854086404],
    [0.1051426854086404, -0.9888832243546856, 0.1051426854086404],
    [-0.1051426854086404, -0.9888832243546856, 0.1051426854086404],
    [0.1051426854086404, 0.9888832243546856, -0.1051426854086404],
    [-0.1051426854086404, 0.9888832243546856, -0.1051426854086404],
    [0.1051426854086404, -0.9888832243546856, -0.1051426854086404],
    [-0.1051426854086404, -0.9888832243546856, -0.1051426854086404],
    [0.9888832243546856, 0.1051426854086404, 0.1051426854086404],
    [-0.9888832243546856, 0.1051426854086404, 0.1051426854086404],
    [0.9888832243546856, -0.1051426854086404, 0.1051426854086404],
    [-0.9888832243546856, -0.1051426854086404, 0.1051426854086404],
    [0.9888832243546856, 0.1051426854086404, -0.1051426854086404],
    [-0.9888832243546856, 0.1051426854086404, -0.1051426854086404],
    [0.9888832243546856, -0.1051426854086404, -0.1051426854086404],
    [-0.9888832243546856, -0.1051426854086404, -0.1051426854086404],
    [0.1750024867623087, 0.1750024867623087, 0.9688902204347074],
    [-0.1750024867623087, 0.1750024867623087, 0.9688902204347074],
    [0.1750024867623087, -0.1750024867623087, 0.9688902204347074],
    [-0.1750024867623087, -0.1750024867623087, 0.9688902204347074],
    [0.1750024867623087, 0.1750024867623087, -0.9688902204347074],
    [-0.1750024867623087, 0.1750024867623087, -0.9688902204347074],
    [0.1750024867623087, -0.1750024867623087, -0.9688902204347074],
    [-0.1750024867623087, -0.1750024867623087, -0.9688902204347074],
    [0.1750024867623087, 0.9688902204347074, 0.1750024867623087],
    [-0.1750024867623087, 0.9688902204347074, 0.1750024867623087],
    [0.1750024867623087, -0.9688902204347074, 0.1750024867623087],
    [-0.1750024867623087, -0.9688902204347074, 0.1750024867623087],
    [0.1750024867623087, 0.9688902204347074, -0.1750024867623087],
    [-0.1750024867623087, 0.9688902204347074, -0.1750024867623087],
    [0.1750024867623087, -0.9688902204347074, -0.1750024867623087],
    [-0.1750024867623087, -0.9688902204347074, -0.1750024867623087],
    [0.9688902204347074, 0.1750024867623087, 0.1750024867623087],
    [-0.9688902204347074, 0.1750024867623087, 0.1750024867623087],
    [0.9688902204347074, -0.1750024867623087, 0.1750024867623087],
    [-0.9688902204347074, -0.1750024867623087, 0.1750024867623087],
    [0.9688902204347074, 0.1750024867623087, -0.1750024867623087],
    [-0.9688902204347074, 0.1750024867623087, -0.1750024867623087],
    [0.9688902204347074, -0.1750024867623087, -0.1750024867623087],
    [-0.9688902204347074, -0.1750024867623087, -0.1750024867623087],
    [0.2477653379650257, 0.2477653379650257, 0.9366027304071631],
    [-0.2477653379650257, 0.2477653379650257, 0.9366027304071631],
    [0.2477653379650257, -0.2477653379650257, 0.9366027304071631],
    [-0.2477653379650257, -0.2477653379650257, 0.9366027304071631],
    [0.2477653379650257, 0.2477653379650257, -0.9366027304071631],
    [-0.2477653379650257, 0.2477653379650257, -0.9366027304071631],
    [0.2477653379650257, -0.2477653379650257, -0.9366027304071631],
    [-0.2477653379650257, -0.2477653379650257, -0.9366027304071631],
    [0.2477653379650257, 0.9366027304071631, 0.2477653379650257],
    [-0.2477653379650257, 0.9366027304071631, 0.2477653379650257],
    [0.2477653379650257, -0.9366027304071631, 0.2477653379650257],
    [-0.2477653379650257, -0.9366027304071631, 0.2477653379650257],
    [0.2477653379650257, 0.9366027304071631, -0.2477653379650257],
    [-0.2477653379650257, 0.9366027304071631, -0.2477653379650257],
    [0.2477653379650257, -0.9366027304071631, -0.2477653379650257],
    [-0.2477653379650257, -0.9366027304071631, -0.2477653379650257],
    [0.9366027304071631, 0.2477653379650257, 0.2477653379650257],
    [-0.9366027304071631, 0.2477653379650257, 0.2477653379650257],
    [0.9366027304071631, -0.2477653379650257, 0.2477653379650257],
    [-0.9366027304071631, -0.2477653379650257, 0.2477653379650257],
    [0.9366027304071631, 0.2477653379650257, -0.2477653379650257],
    [-0.9366027304071631, 0.2477653379650257, -0.2477653379650257],
    [0.9366027304071631, -0.2477653379650257, -0.2477653379650257],
    [-0.9366027304071631, -0.2477653379650257, -0.2477653379650257],
    [0.3206567123955957, 0.3206567123955957, 0.8912679426476061],
    [-0.3206567123955957, 0.3206567123955957, 0.8912679426476061],
    [0.3206567123955957, -0.3206567123955957, 0.8912679426476061],
    [-0.3206567123955957, -0.3206567123955957, 0.8912679426476061],
    [0.3206567123955957, 0.3206567123955957, -0.8912679426476061],
    [-0.3206567123955957, 0.3206567123955957, -0.8912679426476061],
    [0.3206567123955957, -0.3206567123955957, -0.8912679426476061],
    [-0.3206567123955957, -0.3206567123955957, -0.8912679426476061],
    [0.3206567123955957, 0.8912679426476061, 0.3206567123955957],
    [-0.3206567123955957, 0.8912679426476061, 0.3206567123955957],
    [0.3206567123955957, -0.8912679426476061, 0.3206567123955957],
    [-0.3206567123955957, -0.8912679426476061, 0.3206567123955957],
    [0.3206567123955957, 0.8912679426476061, -0.3206567123955957],
    [-0.3206567123955957, 0.8912679426476061, -0.3206567123955957],
    [0.3206567123955957, -0.8912679426476061, -0.3206567123955957],
    [-0.3206567123955957, -0.8912679426476061, -0.3206567123955957],
    [0.8912679426476061, 0.3206567123955957, 0.3206567123955957],
    [-0.8912679426476061, 0.3206567123955957, 0.3206567123955957],
    [0.8912679426476061, -0.3206567123955957, 0.3206567123955957],
    [-0.8912679426476061, -0.3206567123955957, 0.3206567123955957],
    [0.8912679426476061, 0.3206567123955957, -0.3206567123955957],
    [-0.8912679426476061, 0.3206567123955957, -0.3206567123955957],
    [0.8912679426476061, -0.3206567123955957, -0.3206567123955957],
    [-0.8912679426476061, -0.3206567123955957, -0.3206567123955957],
    [0.3916520749849983, 0.3916520749849983, 0.8325967237023519],
    [-0.3916520749849983, 0.3916520749849983, 0.8325967237023519],
    [0.3916520749849983, -0.3916520749849983, 0.8325967237023519],
    [-0.3916520749849983, -0.3916520749849983, 0.8325967237023519],
    [0.3916520749849983, 0.3916520749849983, -0.8325967237023519],
    [-0.3916520749849983, 0.3916520749849983, -0.8325967237023519],
    [0.3916520749849983, -0.3916520749849983, -0.8325967237023519],
    [-0.3916520749849983, -0.3916520749849983, -0.8325967237023519],
    [0.3916520749849983, 0.8325967237023519, 0.3916520749849983],
    [-0.3916520749849983, 0.8325967237023519, 0.3916520749849983],
    [0.3916520749849983, -0.8325967237023519, 0.3916520749849983],
    [-0.3916520749849983, -0.8325967237023519, 0.3916520749849983],
    [0.3916520749849983, 0.8325967237023519, -0.3916520749849983],
    [-0.3916520749849983, 0.8325967237023519, -0.3916520749849983],
    [0.3916520749849983, -0.8325967237023519, -0.3916520749849983],
    [-0.3916520749849983, -0.8325967237023519, -0.3916520749849983],
    [0.8325967237023519, 0.3916520749849983, 0.3916520749849983],
    [-0.8325967237023519, 0.3916520749849983, 0.3916520749849983],
    [0.8325967237023519, -0.3916520749849983, 0.3916520749849983],
    [-0.8325967237023519, -0.3916520749849983, 0.3916520749849983],
    [0.8325967237023519, 0.3916520749849983, -0.3916520749849983],
    [-0.8325967237023519, 0.3916520749849983, -0.3916520749849983],
    [0.8325967237023519, -0.3916520749849983, -0.3916520749849983],
    [-0.8325967237023519, -0.3916520749849983, -0.3916520749849983],
    [0.4590825874187624, 0.4590825874187624, 0.7605829053152514],
    [-0.4590825874187624, 0.4590825874187624, 0.7605829053152514],
    [0.4590825874187624, -0.4590825874187624, 0.7605829053152514],
    [-0.4590825874187624, -0.4590825874187624, 0.7605829053152514],
    [0.4590825874187624, 0.4590825874187624, -0.7605829053152514],
    [-0.4590825874187624, 0.4590825874187624, -0.7605829053152514],
    [0.4590825874187624, -0.4590825874187624, -0.7605829053152514],
    [-0.4590825874187624, -0.4590825874187624, -0.7605829053152514],
    [0.4590825874187624, 0.7605829053152514, 0.4590825874187624],
    [-0.4590825874187624, 0.7605829053152514, 0.4590825874187624],
    [0.4590825874187624, -0.7605829053152514, 0.4590825874187624],
    [-0.4590825874187624, -0.7605829053152514, 0.4590825874187624],
    [0.4590825874187624, 0.7605829053152514, -0.4590825874187624],
    [-0.4590825874187624, 0.7605829053152514, -0.4590825874187624],
    [0.4590825874187624, -0.7605829053152514, -0.4590825874187624],
    [-0.4590825874187624, -0.7605829053152514, -0.4590825874187624],
    [0.7605829053152514, 0.4590825874187624, 0.4590825874187624],
    [-0.7605829053152514, 0.4590825874187624, 0.4590825874187624],
    [0.7605829053152514, -0.4590825874187624, 0.4590825874187624],
    [-0.7605829053152514, -0.4590825874187624, 0.4590825874187624],
    [0.7605829053152514, 0.4590825874187624, -0.4590825874187624],
    [-0.7605829053152514, 0.4590825874187624, -0.4590825874187624],
    [0.7605829053152514, -0.4590825874187624, -0.4590825874187624],
    [-0.7605829053152514, -0.4590825874187624, -0.4590825874187624],
    [0.5214563888415861, 0.5214563888415861, 0.6754009691084143],
    [-0.5214563888415861, 0.5214563888415861, 0.6754009691084143],
    [0.5214563888415861, -0.5214563888415861, 0.6754009691084143],
    [-0.5214563888415861, -0.5214563888415861, 0.6754009691084143],
    [0.5214563888415861, 0.5214563888415861, -0.6754009691084143],
    [-0.5214563888415861, 0.5214563888415861, -0.6754009691084143],
    [0.5214563888415861, -0.5214563888415861, -0.6754009691084143],
    [-0.5214563888415861, -0.5214563888415861, -0.6754009691084143],
    [0.5214563888415861, 0.6754009691084143, 0.5214563888415861],
    [-0.5214563888415861, 0.6754009691084143, 0.5214563888415861],
    [0.5214563888415861, -0.6754009691084143, 0.5214563888415861],
    [-0.5214563888415861, -0.6754009691084143, 0.5214563888415861],
    [0.5214563888415861, 0.6754009691084143, -0.5214563888415861],
    [-0.5214563888415861, 0.6754009691084143, -0.5214563888415861],
    [0.5214563888415861, -0.6754009691084143, -0.5214563888415861],
    [-0.5214563888415861, -0.6754009691084143, -0.5214563888415861],
    [0.6754009691084143, 0.5214563888415861, 0.5214563888415861],
    [-0.6754009691084143, 0.5214563888415861, 0.5214563888415861],
    [0.6754009691084143, -0.5214563888415861, 0.5214563888415861],
    [-0.6754009691084143, -0.5214563888415861, 0.5214563888415861],
    [0.6754009691084143, 0.5214563888415861, -0.5214563888415861],
    [-0.6754009691084143, 0.5214563888415861, -0.5214563888415861],
    [0.6754009691084143, -0.5214563888415861, -0.5214563888415861],
    [-0.6754009691084143, -0.5214563888415861, -0.5214563888415861],
    [0.6253170244654199, 0.6253170244654199, 0.4668589056957432],
    [-0.6253170244654199, 0.6253170244654199, 0.4668589056957432],
    [0.6253170244654199, -0.6253170244654199, 0.4668589056957432],
    [-0.6253170244654199, -0.6253170244654199, 0.4668589056957432],
    [0.6253170244654199, 0.6253170244654199, -0.4668589056957432],
    [-0.6253170244654199, 0.6253170244654199, -0.4668589056957432],
    [0.6253170244654199, -0.6253170244654199, -0.4668589056957432],
    [-0.6253170244654199, -0.6253170244654199, -0.4668589056957432],
    [0.6253170244654199, 0.4668589056957432, 0.6253170244654199],
    [-0.6253170244654199, 0.4668589056957432, 0.6253170244654199],
    [0.6253170244654199, -0.4668589056957432, 0.6253170244654199],
    [-0.6253170244654199, -0.4668589056957432, 0.6253170244654199],
    [0.6253170244654199, 0.4668589056957432, -0.6253170244654199],
    [-0.6253170244654199, 0.4668589056957432, -0.6253170244654199],
    [0.6253170244654199, -0.4668589056957432, -0.6253170244654199],
    [-0.6253170244654199, -0.4668589056957432, -0.6253170244654199],
    [0.4668589056957432, 0.6253170244654199, 0.6253170244654199],
    [-0.4668589056957432, 0.6253170244654199, 0.6253170244654199],
    [0.4668589056957432, -0.6253170244654199, 0.6253170244654199],
    [-0.4668589056957432, -0.6253170244654199, 0.6253170244654199],
    [0.4668589056957432, 0.6253170244654199, -0.6253170244654199],
    [-0.4668589056957432, 0.6253170244654199, -0.6253170244654199],
    [0.4668589056957432, -0.6253170244654199, -0.6253170244654199],
    [-0.4668589056957432, -0.6253170244654199, -0.6253170244654199],
    [0.663792674452317, 0.663792674452317, 0.34461365423743795],
    [-0.663792674452317, 0.663792674452317, 0.34461365423743795],
    [0.663792674452317, -0.663792674452317, 0.34461365423743795],
    [-0.663792674452317, -0.663792674452317, 0.34461365423743795],
    [0.663792674452317, 0.663792674452317, -0.34461365423743795],
    [-0.663792674452317, 0.663792674452317, -0.34461365423743795],
    [0.663792674452317, -0.663792674452317, -0.34461365423743795],
    [-0.663792674452317, -0.663792674452317, -0.34461365423743795],
    [0.663792674452317, 0.34461365423743795, 0.663792674452317],
    [-0.663792674452317, 0.34461365423743795, 0.663792674452317],
    [0.663792674452317, -0.34461365423743795, 0.663792674452317],
    [-0.663792674452317, -0.34461365423743795, 0.663792674452317],
    [0.663792674452317, 0.34461365423743795, -0.663792674452317],
    [-0.663792674452317, 0.34461365423743795, -0.663792674452317],
    [0.663792674452317, -0.34461365423743795, -0.663792674452317],
    [-0.663792674452317, -0.34461365423743795, -0.663792674452317],
    [0.34461365423743795, 0.663792674452317, 0.663792674452317],
    [-0.34461365423743795, 0.663792674452317, 0.663792674452317],
    [0.34461365423743795, -0.663792674452317, 0.663792674452317],
    [-0.34461365423743795, -0.663792674452317, 0.663792674452317],
    [0.34461365423743795, 0.663792674452317, -0.663792674452317],
    [-0.34461365423743795, 0.663792674452317, -0.663792674452317],
    [0.34461365423743795, -0.663792674452317, -0.663792674452317],
    [-0.34461365423743795, -0.663792674452317, -0.663792674452317],
    [0.6910410398498301, 0.6910410398498301, 0.2119541518501843],
    [-0.6910410398498301, 0.6910410398498301, 0.2119541518501843],
    [0.6910410398498301, -0.6910410398498301, 0.2119541518501843],
    [-0.6910410398498301, -0.6910410398498301, 0.2119541518501843],
    [0.6910410398498301, 0.6910410398498301, -0.2119541518501843],
    [-0.6910410398498301, 0.6910410398498301, -0.2119541518501843],
    [0.6910410398498301, -0.6910410398498301, -0.2119541518501843],
    [-0.6910410398498301, -0.6910410398498301, -0.2119541518501843],
    [0.6910410398498301, 0.2119541518501843, 0.6910410398498301],
    [-0.6910410398498301, 0.2119541518501843, 0.6910410398498301],
    [0.6910410398498301, -0.2119541518501843, 0.6910410398498301],
    [-0.6910410398498301, -0.2119541518501843, 0.6910410398498301],
    [0.6910410398498301, 0.2119541518501843, -0.6910410398498301],
    [-0.6910410398498301, 0.2119541518501843, -0.6910410398498301],
    [0.6910410398498301, -0.2119541518501843, -0.6910410398498301],
    [-0.6910410398498301, -0.2119541518501843, -0.6910410398498301],
    [0.2119541518501843, 0.6910410398498301, 0.6910410398498301],
    [-0.2119541518501843, 0.6910410398498301, 0.6910410398498301],
    [0.2119541518501843, -0.6910410398498301, 0.6910410398498301],
    [-0.2119541518501843, -0.6910410398498301, 0.6910410398498301],
    [0.2119541518501843, 0.6910410398498301, -0.6910410398498301],
    [-0.2119541518501843, 0.6910410398498301, -0.6910410398498301],
    [0.2119541518501843, -0.6910410398498301, -0.6910410398498301],
    [-0.2119541518501843, -0.6910410398498301, -0.6910410398498301],
    [0.705290700745776, 0.705290700745776, 0.07162440144995555],
    [-0.705290700745776, 0.705290700745776, 0.07162440144995555],
    [0.705290700745776, -0.705290700745776, 0.07162440144995555],
    [-0.705290700745776, -0.705290700745776, 0.07162440144995555],
    [0.705290700745776, 0.705290700745776, -0.07162440144995555],
    [-0.705290700745776, 0.705290700745776, -0.07162440144995555],
    [0.705290700745776, -0.705290700745776, -0.07162440144995555],
    [-0.705290700745776, -0.705290700745776, -0.07162440144995555],
    [0.705290700745776, 0.07162440144995555, 0.705290700745776],
    [-0.705290700745776, 0.07162440144995555, 0.705290700745776],
    [0.705290700745776, -0.07162440144995555, 0.705290700745776],
    [-0.705290700745776, -0.07162440144995555, 0.705290700745776],
    [0.705290700745776, 0.07162440144995555, -0.705290700745776],
    [-0.705290700745776, 0.07162440144995555, -0.705290700745776],
    [0.705290700745776, -0.07162440144995555, -0.705290700745776],
    [-0.705290700745776, -0.07162440144995555, -0.705290700745776],
    [0.07162440144995555, 0.705290700745776, 0.705290700745776],
    [-0.07162440144995555, 0.705290700745776, 0.705290700745776],
    [0.07162440144995555, -0.705290700745776, 0.705290700745776],
    [-0.07162440144995555, -0.705290700745776, 0.705290700745776],
    [0.07162440144995555, 0.705290700745776, -0.705290700745776],
    [-0.07162440144995555, 0.705290700745776, -0.705290700745776],
    [0.07162440144995555, -0.705290700745776, -0.705290700745776],
    [-0.07162440144995555, -0.705290700745776, -0.705290700745776],
    [0.123668676265799, 0.9923235654314901, 0.0],
    [-0.123668676265799, 0.9923235654314901, 0.0],
    [0.123668676265799, -0.9923235654314901, 0.0],
    [-0.123668676265799, -0.9923235654314901, 0.0],
    [0.9923235654314901, 0.123668676265799, 0.0],
    [-0.9923235654314901, 0.123668676265799, 0.0],
    [0.9923235654314901, -0.123668676265799, 0.0],
    [-0.9923235654314901, -0.123668676265799, 0.0],
    [0.123668676265799, 0.0, 0.9923235654314901],
    [-0.123668676265799, 0.0, 0.9923235654314901],
    [0.123668676265799, 0.0, -0.9923235654314901],
    [-0.123668676265799, 0.0, -0.9923235654314901],
    [0.9923235654314901, 0.0, 0.123668676265799],
    [-0.9923235654314901, 0.0, 0.123668676265799],
    [0.9923235654314901, 0.0, -0.123668676265799],
    [-0.9923235654314901, 0.0, -0.123668676265799],
    [0.0, 0.123668676265799, 0.9923235654314901],
    [0.0, -0.123668676265799, 0.9923235654314901],
    [0.0, 0.123668676265799, -0.9923235654314901],
    [0.0, -0.123668676265799, -0.9923235654314901],
    [0.0, 0.9923235654314901, 0.123668676265799],
    [0.0, -0.9923235654314901, 0.123668676265799],
    [0.0, 0.9923235654314901, -0.123668676265799],
    [0.0, -0.9923235654314901, -0.123668676265799],
    [0.2940777114468387, 0.9557815124965484, 0.0],
    [-0.2940777114468387, 0.9557815124965484, 0.0],
    [0.2940777114468387, -0.9557815124965484, 0.0],
    [-0.2940777114468387, -0.9557815124965484, 0.0],
    [0.9557815124965484, 0.2940777114468387, 0.0],
    [-0.9557815124965484, 0.2940777114468387, 0.0],
    [0.9557815124965484, -0.2940777114468387, 0.0],
    [-0.9557815124965484, -0.2940777114468387, 0.0],
    [0.2940777114468387, 0.0, 0.9557815124965484],
    [-0.2940777114468387, 0.0, 0.9557815124965484],
    [0.2940777114468387, 0.0, -0.9557815124965484],
    [-0.2940777114468387, 0.0, -0.9557815124965484],
    [0.9557815124965484, 0.0, 0.2940777114468387],
    [-0.9557815124965484, 0.0, 0.2940777114468387],
    [0.9557815124965484, 0.0, -0.2940777114468387],
    [-0.9557815124965484, 0.0, -0.2940777114468387],
    [0.0, 0.2940777114468387, 0.9557815124965484],
    [0.0, -0.2940777114468387, 0.9557815124965484],
    [0.0, 0.2940777114468387, -0.9557815124965484],
    [0.0, -0.2940777114468387, -0.9557815124965484],
    [0.0, 0.9557815124965484, 0.2940777114468387],
    [0.0, -0.9557815124965484, 0.2940777114468387],
    [0.0, 0.9557815124965484, -0.2940777114468387],
    [0.0, -0.9557815124965484, -0.2940777114468387],
    [0.4697753849207649, 0.8827859807011816, 0.0],
    [-0.4697753849207649, 0.8827859807011816, 0.0],
    [0.4697753849207649, -0.8827859807011816, 0.0],
    [-0.4697753849207649, -0.8827859807011816, 0.0],
    [0.8827859807011816, 0.4697753849207649, 0.0],
    [-0.8827859807011816, 0.4697753849207649, 0.0],
    [0.8827859807011816, -0.4697753849207649, 0.0],
    [-0.8827859807011816, -0.4697753849207649, 0.0],
    [0.4697753849207649, 0.0, 0.8827859807011816],
    [-0.4697753849207649, 0.0, 0.8827859807011816],
    [0.4697753849207649, 0.0, -0.8827859807011816],
    [-0.4697753849207649, 0.0, -0.8827859807011816],
    [0.8827859807011816, 0.0, 0.4697753849207649],
    [-0.8827859807011816, 0.0, 0.4697753849207649],
    [0.8827859807011816, 0.0, -0.4697753849207649],
    [-0.8827859807011816, 0.0, -0.4697753849207649],
    [0.0, 0.4697753849207649, 0.8827859807011816],
    [0.0, -0.4697753849207649, 0.8827859807011816],
    [0.0, 0.4697753849207649, -0.8827859807011816],
    [0.0, -0.4697753849207649, -0.8827859807011816],
    [0.0, 0.8827859807011816, 0.4697753849207649],
    [0.0, -0.8827859807011816, 0.4697753849207649],
    [0.0, 0.8827859807011816, -0.4697753849207649],
    [0.0, -0.8827859807011816, -0.4697753849207649],
    [0.6334563241139567, 0.7737784472573748, 0.0],
    [-0.6334563241139567, 0.7737784472573748, 0.0],
    [0.6334563241139567, -0.7737784472573748, 0.0],
    [-0.6334563241139567, -0.7737784472573748, 0.0],
    [0.7737784472573748, 0.6334563241139567, 0.0],
    [-0.7737784472573748, 0.6334563241139567, 0.0],
    [0.7737784472573748, -0.6334563241139567, 0.0],
    [-0.7737784472573748, -0.6334563241139567, 0.0],
    [0.6334563241139567, 0.0, 0.7737784472573748],
    [-0.6334563241139567, 0.0, 0.7737784472573748],
    [0.6334563241139567, 0.0, -0.7737784472573748],
    [-0.6334563241139567, 0.0, -0.7737784472573748],
    [0.7737784472573748, 0.0, 0.6334563241139567],
    [-0.7737784472573748, 0.0, 0.6334563241139567],
    [0.7737784472573748, 0.0, -0.6334563241139567],
    [-0.7737784472573748, 0.0, -0.6334563241139567],
    [0.0, 0.6334563241139567, 0.7737784472573748],
    [0.0, -0.6334563241139567, 0.7737784472573748],
    [0.0, 0.6334563241139567, -0.7737784472573748],
    [0.0, -0.6334563241139567, -0.7737784472573748],
    [0.0, 0.7737784472573748, 0.6334563241139567],
    [0.0, -0.7737784472573748, 0.6334563241139567],
    [0.0, 0.7737784472573748, -0.6334563241139567],
    [0.0, -0.7737784472573748, -0.6334563241139567],
    [0.05974048614181342, 0.2029128752777523, 0.97737272284531],
    [-0.05974048614181342, 0.2029128752777523, 0.97737272284531],
    [0.05974048614181342, -0.2029128752777523, 0.97737272284531],
    [-0.05974048614181342, -0.2029128752777523, 0.97737272284531],
    [0.05974048614181342, 0.2029128752777523, -0.97737272284531],
    [-0.05974048614181342, 0.2029128752777523, -0.97737272284531],
    [0.05974048614181342, -0.2029128752777523, -0.97737272284531],
    [-0.05974048614181342, -0.2029128752777523, -0.97737272284531],
    [0.05974048614181342, 0.97737272284531, 0.2029128752777523],
    [-0.05974048614181342, 0.97737272284531, 0.2029128752777523],
    [0.05974048614181342, -0.97737272284531, 0.2029128752777523],
    [-0.05974048614181342, -0.97737272284531, 0.2029128752777523],
    [0.05974048614181342, 0.97737272284531, -0.2029128752777523],
    [-0.05974048614181342, 0.97737272284531, -0.2029128752777523],
    [0.05974048614181342, -0.97737272284531, -0.2029128752777523],
    [-0.05974048614181342, -0.97737272284531, -0.2029128752777523],
    [0.2029128752777523, 0.05974048614181342, 0.97737272284531],
    [-0.2029128752777523, 0.05974048614181342, 0.97737272284531],
    [0.2029128752777523, -0.05974048614181342, 0.97737272284531],
    [-0.2029128752777523, -0.05974048614181342, 0.97737272284531],
    [0.2029128752777523, 0.05974048614181342, -0.97737272284531],
    [-0.2029128752777523, 0.05974048614181342, -0.97737272284531],
    [0.2029128752777523, -0.05974048614181342, -0.97737272284531],
    [-0.2029128752777523, -0.05974048614181342, -0.97737272284531],
    [0.2029128752777523, 0.97737272284531, 0.05974048614181342],
    [-0.2029128752777523, 0.97737272284531, 0.05974048614181342],
    [0.2029128752777523, -0.97737272284531, 0.05974048614181342],
    [-0.2029128752777523, -0.97737272284531, 0.05974048614181342],
    [0.2029128752777523, 0.97737272284531, -0.05974048614181342],
    [-0.2029128752777523, 0.97737272284531, -0.05974048614181342],
    [0.2029128752777523, -0.97737272284531, -0.05974048614181342],
    [-0.2029128752777523, -0.97737272284531, -0.05974048614181342],
    [0.97737272284531, 0.05974048614181342, 0.2029128752777523],
    [-0.97737272284531, 0.05974048614181342, 0.2029128752777523],
    [0.97737272284531, -0.05974048614181342, 0.2029128752777523],
    [-0.97737272284531, -0.05974048614181342, 0.2029128752777523],
    [0.97737272284531, 0.05974048614181342, -0.2029128752777523],
    [-0.97737272284531, 0.05974048614181342, -0.2029128752777523],
    [0.97737272284531, -0.05974048614181342, -0.2029128752777523],
    [-0.97737272284531, -0.05974048614181342, -0.2029128752777523],
    [0.97737272284531, 0.2029128752777523, 0.05974048614181342],
    [-0.97737272284531, 0.2029128752777523, 0.05974048614181342],
    [0.97737272284531, -0.2029128752777523, 0.05974048614181342],
    [-0.97737272284531, -0.2029128752777523, 0.05974048614181342],
    [0.97737272284531, 0.2029128752777523, -0.05974048614181342],
    [-0.97737272284531, 0.2029128752777523, -0.05974048614181342],
    [0.97737272284531, -0.2029128752777523, -0.05974048614181342],
    [-0.97737272284531, -0.2029128752777523, -0.05974048614181342],
    [0.1375760408473636, 0.4602621942484054, 0.8770584618658027],
    [-0.1375760408473636, 0.4602621942484054, 0.8770584618658027],
    [0.1375760408473636, -0.4602621942484054, 0.8770584618658027],
    [-0.1375760408473636, -0.4602621942484054, 0.8770584618658027],
    [0.1375760408473636, 0.4602621942484054, -0.8770584618658027],
    [-0.1375760408473636, 0.4602621942484054, -0.8770584618658027],
    [0.1375760408473636, -0.4602621942484054, -0.8770584618658027],
    [-0.1375760408473636, -0.4602621942484054, -0.8770584618658027],
    [0.1375760408473636, 0.8770584618658027, 0.4602621942484054],
    [-0.1375760408473636, 0.8770584618658027, 0.4602621942484054],
    [0.1375760408473636, -0.8770584618658027, 0.4602621942484054],
    [-0.1375760408473636, -0.8770584618658027, 0.4602621942484054],
    [0.1375760408473636, 0.8770584618658027, -0.4602621942484054],
    [-0.1375760408473636, 0.8770584618658027, -0.4602621942484054],
    [0.1375760408473636, -0.8770584618658027, -0.4602621942484054],
    [-0.1375760408473636, -0.8770584618658027, -0.4602621942484054],
    [0.4602621942484054, 0.1375760408473636, 0.8770584618658027],
    [-0.4602621942484054, 0.1375760408473636, 0.8770584618658027],
    [0.4602621942484054, -0.1375760408473636, 0.8770584618658027],
    [-0.4602621942484054, -0.1375760408473636, 0.8770584618658027],
    [0.4602621942484054, 0.1375760408473636, -0.8770584618658027],
    [-0.4602621942484054, 0.1375760408473636, -0.8770584618658027],
    [0.4602621942484054, -0.1375760408473636, -0.8770584618658027],
    [-0.4602621942484054, -0.1375760408473636, -0.8770584618658027],
    [0.4602621942484054, 0.8770584618658027, 0.1375760408473636],
    [-0.4602621942484054, 0.8770584618658027, 0.1375760408473636],
    [0.4602621942484054, -0.8770584618658027, 0.1375760408473636],
    [-0.4602621942484054, -0.8770584618658027, 0.1375760408473636],
    [0.4602621942484054, 0.8770584618658027, -0.1375760408473636],
    [-0.4602621942484054, 0.8770584618658027, -0.1375760408473636],
    [0.4602621942484054, -0.8770584618658027, -0.1375760408473636],
    [-0.4602621942484054, -0.8770584618658027, -0.1375760408473636],
    [0.8770584618658027, 0.1375760408473636, 0.4602621942484054],
    [-0.8770584618658027, 0.1375760408473636, 0.4602621942484054],
    [0.8770584618658027, -0.1375760408473636, 0.4602621942484054],
    [-0.8770584618658027, -0.1375760408473636, 0.4602621942484054],
    [0.8770584618658027, 0.1375760408473636, -0.4602621942484054],
    [-0.8770584618658027, 0.1375760408473636, -0.4602621942484054],
    [0.8770584618658027, -0.1375760408473636, -0.4602621942484054],
    [-0.8770584618658027, -0.1375760408473636, -0.4602621942484054],
    [0.8770584618658027, 0.4602621942484054, 0.1375760408473636],
    [-0.8770584618658027, 0.4602621942484054, 0.1375760408473636],
    [0.8770584618658027, -0.4602621942484054, 0.1375760408473636],
    [-0.8770584618658027, -0.4602621942484054, 0.1375760408473636],
    [0.8770584618658027, 0.4602621942484054, -0.1375760408473636],
    [-0.8770584618658027, 0.4602621942484054, -0.1375760408473636],
    [0.8770584618658027, -0.4602621942484054, -0.1375760408473636],
    [-0.8770584618658027, -0.4602621942484054, -0.1375760408473636],
    [0.3391016526336286, 0.5030673999662036, 0.7949422999642084],
    [-0.3391016526336286, 0.5030673999662036, 0.7949422999642084],
    [0.3391016526336286, -0.5030673999662036, 0.7949422999642084],
    [-0.3391016526336286, -0.5030673999662036, 0.7949422999642084],
    [0.3391016526336286, 0.5030673999662036, -0.7949422999642084],
    [-0.3391016526336286, 0.5030673999662036, -0.7949422999642084],
    [0.3391016526336286, -0.5030673999662036, -0.7949422999642084],
    [-0.3391016526336286, -0.5030673999662036, -0.7949422999642084],
    [0.3391016526336286, 0.7949422999642084, 0.5030673999662036],
    [-0.3391016526336286, 0.7949422999642084, 0.5030673999662036],
    [0.3391016526336286, -0.7949422999642084, 0.5030673999662036],
    [-0.3391016526336286, -0.7949422999642084, 0.5030673999662036],
    [0.3391016526336286, 0.7949422999642084, -0.5030673999662036],
    [-0.3391016526336286, 0.7949422999642084, -0.5030673999662036],
    [0.3391016526336286, -0.7949422999642084, -0.5030673999662036],
    [-0.3391016526336286, -0.7949422999642084, -0.5030673999662036],
    [0.5030673999662036, 0.3391016526336286, 0.7949422999642084],
    [-0.5030673999662036, 0.3391016526336286, 0.7949422999642084],
    [0.5030673999662036, -0.3391016526336286, 0.7949422999642084],
    [-0.5030673999662036, -0.3391016526336286, 0.7949422999642084],
    [0.5030673999662036, 0.3391016526336286, -0.7949422999642084],
    [-0.5030673999662036, 0.3391016526336286, -0.7949422999642084],
    [0.5030673999662036, -0.3391016526336286, -0.7949422999642084],
    [-0.5030673999662036, -0.3391016526336286, -0.7949422999642084],
    [0.5030673999662036, 0.7949422999642084, 0.3391016526336286],
    [-0.5030673999662036, 0.7949422999642084, 0.3391016526336286],
    [0.5030673999662036, -0.7949422999642084, 0.3391016526336286],
    [-0.5030673999662036, -0.7949422999642084, 0.3391016526336286],
    [0.5030673999662036, 0.7949422999642084, -0.3391016526336286],
    [-0.5030673999662036, 0.7949422999642084, -0.3391016526336286],
    [0.5030673999662036, -0.7949422999642084, -0.3391016526336286],
    [-0.5030673999662036, -0.7949422999642084, -0.3391016526336286],
    [0.7949422999642084, 0.3391016526336286, 0.5030673999662036],
    [-0.7949422999642084, 0.3391016526336286, 0.5030673999662036],
    [0.7949422999642084, -0.3391016526336286, 0.5030673999662036],
    [-0.7949422999642084, -0.3391016526336286, 0.5030673999662036],
    [0.7949422999642084, 0.3391016526336286, -0.5030673999662036],
    [-0.7949422999642084, 0.3391016526336286, -0.5030673999662036],
    [0.7949422999642084, -0.3391016526336286, -0.5030673999662036],
    [-0.7949422999642084, -0.3391016526336286, -0.5030673999662036],
    [0.7949422999642084, 0.5030673999662036, 0.3391016526336286],
    [-0.7949422999642084, 0.5030673999662036, 0.3391016526336286],
    [0.7949422999642084, -0.5030673999662036, 0.3391016526336286],
    [-0.7949422999642084, -0.5030673999662036, 0.3391016526336286],
    [0.7949422999642084, 0.5030673999662036, -0.3391016526336286],
    [-0.7949422999642084, 0.5030673999662036, -0.3391016526336286],
    [0.7949422999642084, -0.5030673999662036, -0.3391016526336286],
    [-0.7949422999642084, -0.5030673999662036, -0.3391016526336286],
    [0.127167519143982, 0.2817606422442134, 0.9510201693743899],
    [-0.127167519143982, 0.2817606422442134, 0.9510201693743899],
    [0.127167519143982, -0.2817606422442134, 0.9510201693743899],
    [-0.127167519143982, -0.2817606422442134, 0.9510201693743899],
    [0.127167519143982, 0.2817606422442134, -0.9510201693743899],
    [-0.127167519143982, 0.2817606422442134, -0.9510201693743899],
    [0.127167519143982, -0.2817606422442134, -0.9510201693743899],
    [-0.127167519143982, -0.2817606422442134, -0.9510201693743899],
    [0.127167519143982, 0.9510201693743899, 0.2817606422442134],
    [-0.127167519143982, 0.9510201693743899, 0.2817606422442134],
    [0.127167519143982, -0.9510201693743899, 0.2817606422442134],
    [-0.127167519143982, -0.9510201693743899, 0.2817606422442134],
    [0.127167519143982, 0.9510201693743899, -0.2817606422442134],
    [-0.127167519143982, 0.9510201693743899, -0.2817606422442134],
    [0.127167519143982, -0.9510201693743899, -0.2817606422442134],
    [-0.127167519143982, -0.9510201693743899, -0.2817606422442134],
    [0.2817606422442134, 0.127167519143982, 0.9510201693743899],
    [-0.2817606422442134, 0.127167519143982, 0.9510201693743899],
    [0.2817606422442134, -0.127167519143982, 0.9510201693743899],
    [-0.2817606422442134, -0.127167519143982, 0.9510201693743899],
    [0.2817606422442134, 0.127167519143982, -0.9510201693743899],
    [-0.2817606422442134, 0.127167519143982, -0.9510201693743899],
    [0.2817606422442134, -0.127167519143982, -0.9510201693743899],
    [-0.2817606422442134, -0.127167519143982, -0.9510201693743899],
    [0.2817606422442134, 0.9510201693743899, 0.127167519143982],
    [-0.2817606422442134, 0.9510201693743899, 0.127167519143982],
    [0.2817606422442134, -0.9510201693743899, 0.127167519143982],
    [-0.2817606422442134, -0.9510201693743899, 0.127167519143982],
    [0.2817606422442134, 0.9510201693743899, -0.127167519143982],
    [-0.2817606422442134, 0.9510201693743899, -0.127167519143982],
    [0.2817606422442134, -0.9510201693743899, -0.127167519143982],
    [-0.2817606422442134, -0.9510201693743899, -0.127167519143982],
    [0.9510201693743899, 0.127167519143982, 0.2817606422442134],
    [-0.9510201693743899, 0.127167519143982, 0.2817606422442134],
    [0.9510201693743899, -0.127167519143982, 0.2817606422442134],
    [-0.9510201693743899, -0.127167519143982, 0.2817606422442134],
    [0.9510201693743899, 0.127167519143982, -0.2817606422442134],
    [-0.9510201693743899, 0.127167519143982, -0.2817606422442134],
    [0.9510201693743899, -0.127167519143982, -0.2817606422442134],
    [-0.9510201693743899, -0.127167519143982, -0.2817606422442134],
    [0.9510201693743899, 0.2817606422442134, 0.127167519143982],
    [-0.9510201693743899, 0.2817606422442134, 0.127167519143982],
    [0.9510201693743899, -0.2817606422442134, 0.127167519143982],
    [-0.9510201693743899, -0.2817606422442134, 0.127167519143982],
    [0.9510201693743899, 0.2817606422442134, -0.127167519143982],
    [-0.9510201693743899, 0.2817606422442134, -0.127167519143982],
    [0.9510201693743899, -0.2817606422442134, -0.127167519143982],
    [-0.9510201693743899, -0.2817606422442134, -0.127167519143982],
    [0.2693120740413512, 0.4331561291720157, 0.860143461601762],
    [-0.2693120740413512, 0.4331561291720157, 0.860143461601762],
    [0.2693120740413512, -0.4331561291720157, 0.860143461601762],
    [-0.2693120740413512, -0.4331561291720157, 0.860143461601762],
    [0.2693120740413512, 0.4331561291720157, -0.860143461601762],
    [-0.2693120740413512, 0.4331561291720157, -0.860143461601762],
    [0.2693120740413512, -0.4331561291720157, -0.860143461601762],
    [-0.2693120740413512, -0.4331561291720157, -0.860143461601762],
    [0.2693120740413512, 0.860143461601762, 0.4331561291720157],
    [-0.2693120740413512, 0.860143461601762, 0.4331561291720157],
    [0.2693120740413512, -0.860143461601762, 0.4331561291720157],
    [-0.2693120740413512, -0.860143461601762, 0.4331561291720157],
    [0.2693120740413512, 0.860143461601762, -0.4331561291720157],
    [-0.2693120740413512, 0.860143461601762, -0.4331561291720157],
    [0.2693120740413512, -0.860143461601762, -0.4331561291720157],
    [-0.2693120740413512, -0.860143461601762, -0.4331561291720157],
    [0.4331561291720157, 0.2693120740413512, 0.860143461601762],
    [-0.4331561291720157, 0.2693120740413512, 0.860143461601762],
    [0.4331561291720157, -0.2693120740413512, 0.860143461601762],
    [-0.4331561291720157, -0.2693120740413512, 0.860143461601762],
    [0.4331561291720157, 0.2693120740413512, -0.860143461601762],
    [-0.4331561291720157, 0.2693120740413512, -0.860143461601762],
    [0.4331561291720157, -0.2693120740413512, -0.860143461601762],
    [-0.4331561291720157, -0.2693120740413512, -0.860143461601762],
    [0.4331561291720157, 0.860143461601762, 0.2693120740413512],
    [-0.4331561291720157, 0.860143461601762, 0.2693120740413512],
    [0.4331561291720157, -0.860143461601762, 0.2693120740413512],
    [-0.4331561291720157, -0.860143461601762, 0.2693120740413512],
    [0.4331561291720157, 0.860143461601762, -0.2693120740413512],
    [-0.4331561291720157, 0.860143461601762, -0.2693120740413512],
    [0.4331561291720157, -0.860143461601762, -0.2693120740413512],
    [-0.4331561291720157, -0.860143461601762, -0.2693120740413512],
    [0.860143461601762, 0.2693120740413512, 0.4331561291720157],
    [-0.860143461601762, 0.2693120740413512, 0.4331561291720157],
    [0.860143461601762, -0.2693120740413512, 0.4331561291720157],
    [-0.860143461601762, -0.2693120740413512, 0.4331561291720157],
    [0.860143461601762, 0.2693120740413512, -0.4331561291720157],
    [-0.860143461601762, 0.2693120740413512, -0.4331561291720157],
    [0.860143461601762, -0.2693120740413512, -0.4331561291720157],
    [-0.860143461601762, -0.2693120740413512, -0.4331561291720157],
    [0.860143461601762, 0.4331561291720157, 0.2693120740413512],
    [-0.860143461601762, 0.4331561291720157, 0.2693120740413512],
    [0.860143461601762, -0.4331561291720157, 0.2693120740413512],
    [-0.860143461601762, -0.4331561291720157, 0.2693120740413512],
    [0.860143461601762, 0.4331561291720157, -0.2693120740413512],
    [-0.860143461601762, 0.4331561291720157, -0.2693120740413512],
    [0.860143461601762, -0.4331561291720157, -0.2693120740413512],
    [-0.860143461601762, -0.4331561291720157, -0.2693120740413512],
    [0.1419786452601918, 0.6256167358580814, 0.7671021862205583],
    [-0.1419786452601918, 0.6256167358580814, 0.7671021862205583],
    [0.1419786452601918, -0.6256167358580814, 0.7671021862205583],
    [-0.1419786452601918, -0.6256167358580814, 0.7671021862205583],
    [0.1419786452601918, 0.6256167358580814, -0.7671021862205583],
    [-0.1419786452601918, 0.6256167358580814, -0.7671021862205583],
    [0.1419786452601918, -0.6256167358580814, -0.7671021862205583],
    [-0.1419786452601918, -0.6256167358580814, -0.7671021862205583],
    [0.1419786452601918, 0.7671021862205583, 0.6256167358580814],
    [-0.1419786452601918, 0.7671021862205583, 0.6256167358580814],
    [0.1419786452601918, -0.7671021862205583, 0.6256167358580814],
    [-0.1419786452601918, -0.7671021862205583, 0.6256167358580814],
    [0.1419786452601918, 0.7671021862205583, -0.6256167358580814],
    [-0.1419786452601918, 0.7671021862205583, -0.6256167358580814],
    [0.1419786452601918, -0.7671021862205583, -0.6256167358580814],
    [-0.1419786452601918, -0.7671021862205583, -0.6256167358580814],
    [0.6256167358580814, 0.1419786452601918, 0.7671021862205583],
    [-0.6256167358580814, 0.1419786452601918, 0.7671021862205583],
    [0.6256167358580814, -0.1419786452601918, 0.7671021862205583],
    [-0.6256167358580814, -0.1419786452601918, 0.7671021862205583],
    [0.6256167358580814, 0.1419786452601918, -0.7671021862205583],
    [-0.6256167358580814, 0.1419786452601918, -0.7671021862205583],
    [0.6256167358580814, -0.1419786452601918, -0.7671021862205583],
    [-0.6256167358580814, -0.1419786452601918, -0.7671021862205583],
    [0.6256167358580814, 0.7671021862205583, 0.1419786452601918],
    [-0.6256167358580814, 0.7671021862205583, 0.1419786452601918],
    [0.6256167358580814, -0.7671021862205583, 0.1419786452601918],
    [-0.6256167358580814, -0.7671021862205583, 0.1419786452601918],
    [0.6256167358580814, 0.7671021862205583, -0.1419786452601918],
    [-0.6256167358580814, 0.7671021862205583, -0.1419786452601918],
    [0.6256167358580814, -0.7671021862205583, -0.1419786452601918],
    [-0.6256167358580814, -0.7671021862205583, -0.1419786452601918],
    [0.7671021862205583, 0.1419786452601918, 0.6256167358580814],
    [-0.7671021862205583, 0.1419786452601918, 0.6256167358580814],
    [0.7671021862205583, -0.1419786452601918, 0.6256167358580814],
    [-0.7671021862205583, -0.1419786452601918, 0.6256167358580814],
    [0.7671021862205583, 0.1419786452601918, -0.6256167358580814],
    [-0.7671021862205583, 0.1419786452601918, -0.6256167358580814],
    [0.7671021862205583, -0.1419786452601918, -0.6256167358580814],
    [-0.7671021862205583, -0.1419786452601918, -0.6256167358580814],
    [0.7671021862205583, 0.6256167358580814, 0.1419786452601918],
    [-0.7671021862205583, 0.6256167358580814, 0.1419786452601918],
    [0.7671021862205583, -0.6256167358580814, 0.1419786452601918],
    [-0.7671021862205583, -0.6256167358580814, 0.1419786452601918],
    [0.7671021862205583, 0.6256167358580814, -0.1419786452601918],
    [-0.7671021862205583, 0.6256167358580814, -0.1419786452601918],
    [0.7671021862205583, -0.6256167358580814, -0.1419786452601918],
    [-0.7671021862205583, -0.6256167358580814, -0.1419786452601918],
    [0.06709284600738255, 0.3798395216859157, 0.922616110730809],
    [-0.06709284600738255, 0.3798395216859157, 0.922616110730809],
    [0.06709284600738255, -0.3798395216859157, 0.922616110730809],
    [-0.06709284600738255, -0.3798395216859157, 0.922616110730809],
    [0.06709284600738255, 0.3798395216859157, -0.922616110730809],
    [-0.06709284600738255, 0.3798395216859157, -0.922616110730809],
    [0.06709284600738255, -0.3798395216859157, -0.922616110730809],
    [-0.06709284600738255, -0.3798395216859157, -0.922616110730809],
    [0.06709284600738255, 0.922616110730809, 0.3798395216859157],
    [-0.06709284600738255, 0.922616110730809, 0.3798395216859157],
    [0.06709284600738255, -0.922616110730809, 0.3798395216859157],
    [-0.06709284600738255, -0.922616110730809, 0.3798395216859157],
    [0.06709284600738255, 0.922616110730809, -0.3798395216859157],
    [-0.06709284600738255, 0.922616110730809, -0.3798395216859157],
    [0.06709284600738255, -0.922616110730809, -0.3798395216859157],
    [-0.06709284600738255, -0.922616110730809, -0.3798395216859157],
    [0.3798395216859157, 0.06709284600738255, 0.922616110730809],
    [-0.3798395216859157, 0.06709284600738255, 0.922616110730809],
    [0.3798395216859157, -0.06709284600738255, 0.922616110730809],
    [-0.3798395216859157, -0.06709284600738255, 0.922616110730809],
    [0.3798395216859157, 0.06709284600738255, -0.922616110730809],
    [-0.3798395216859157, 0.06709284600738255, -0.922616110730809],
    [0.3798395216859157, -0.06709284600738255, -0.922616110730809],
    [-0.3798395216859157, -0.06709284600738255, -0.922616110730809],
    [0.3798395216859157, 0.922616110730809, 0.06709284600738255],
    [-0.3798395216859157, 0.922616110730809, 0.06709284600738255],
    [0.3798395216859157, -0.922616110730809, 0.06709284600738255],
    [-0.3798395216859157, -0.922616110730809, 0.06709284600738255],
    [0.3798395216859157, 0.922616110730809, -0.06709284600738255],
    [-0.3798395216859157, 0.922616110730809, -0.06709284600738255],
    [0.3798395216859157, -0.922616110730809, -0.06709284600738255],
    [-0.3798395216859157, -0.922616110730809, -0.06709284600738255],
    [0.922616110730809, 0.06709284600738255, 0.3798395216859157],
    [-0.922616110730809, 0.06709284600738255, 0.3798395216859157],
    [0.922616110730809, -0.06709284600738255, 0.3798395216859157],
    [-0.922616110730809, -0.06709284600738255, 0.3798395216859157],
    [0.922616110730809, 0.06709284600738255, -0.3798395216859157],
    [-0.922616110730809, 0.06709284600738255, -0.3798395216859157],
    [0.922616110730809, -0.06709284600738255, -0.3798395216859157],
    [-0.922616110730809, -0.06709284600738255, -0.3798395216859157],
    [0.922616110730809, 0.3798395216859157, 0.06709284600738255],
    [-0.922616110730809, 0.3798395216859157, 0.06709284600738255],
    [0.922616110730809, -0.3798395216859157, 0.06709284600738255],
    [-0.922616110730809, -0.3798395216859157, 0.06709284600738255],
    [0.922616110730809, 0.3798395216859157, -0.06709284600738255],
    [-0.922616110730809, 0.3798395216859157, -0.06709284600738255],
    [0.922616110730809, -0.3798395216859157, -0.06709284600738255],
    [-0.922616110730809, -0.3798395216859157, -0.06709284600738255],
    [0.07057738183256172, 0.551750542142352, 0.8310175524134743],
    [-0.07057738183256172, 0.551750542142352, 0.8310175524134743],
    [0.07057738183256172, -0.551750542142352, 0.8310175524134743],
    [-0.07057738183256172, -0.551750542142352, 0.8310175524134743],
    [0.07057738183256172, 0.551750542142352, -0.8310175524134743],
    [-0.07057738183256172, 0.551750542142352, -0.8310175524134743],
    [0.07057738183256172, -0.551750542142352, -0.8310175524134743],
    [-0.07057738183256172, -0.551750542142352, -0.8310175524134743],
    [0.07057738183256172, 0.8310175524134743, 0.551750542142352],
    [-0.07057738183256172, 0.8310175524134743, 0.551750542142352],
    [0.07057738183256172, -0.8310175524134743, 0.551750542142352],
    [-0.07057738183256172, -0.8310175524134743, 0.551750542142352],
    [0.07057738183256172, 0.8310175524134743, -0.551750542142352],
    [-0.07057738183256172, 0.8310175524134743, -0.551750542142352],
    [0.07057738183256172, -0.8310175524134743, -0.551750542142352],
    [-0.07057738183256172, -0.8310175524134743, -0.551750542142352],
    [0.551750542142352, 0.07057738183256172, 0.8310175524134743],
    [-0.551750542142352, 0.07057738183256172, 0.8310175524134743],
    [0.551750542142352, -0.07057738183256172, 0.8310175524134743],
    [-0.551750542142352, -0.07057738183256172, 0.8310175524134743],
    [0.551750542142352, 0.07057738183256172, -0.8310175524134743],
    [-0.551750542142352, 0.07057738183256172, -0.8310175524134743],
    [0.551750542142352, -0.07057738183256172, -0.8310175524134743],
    [-0.551750542142352, -0.07057738183256172, -0.8310175524134743],
    [0.551750542142352, 0.8310175524134743, 0.07057738183256172],
    [-0.551750542142352, 0.8310175524134743, 0.07057738183256172],
    [0.551750542142352, -0.8310175524134743, 0.07057738183256172],
    [-0.551750542142352, -0.8310175524134743, 0.07057738183256172],
    [0.551750542142352, 0.8310175524134743, -0.07057738183256172],
    [-0.551750542142352, 0.8310175524134743, -0.07057738183256172],
    [0.551750542142352, -0.8310175524134743, -0.07057738183256172],
    [-0.551750542142352, -0.8310175524134743, -0.07057738183256172],
    [0.8310175524134743, 0.07057738183256172, 0.551750542142352],
    [-0.8310175524134743, 0.07057738183256172, 0.551750542142352],
    [0.8310175524134743, -0.07057738183256172, 0.551750542142352],
    [-0.8310175524134743, -0.07057738183256172, 0.551750542142352],
    [0.8310175524134743, 0.07057738183256172, -0.551750542142352],
    [-0.8310175524134743, 0.07057738183256172, -0.551750542142352],
    [0.8310175524134743, -0.07057738183256172, -0.551750542142352],
    [-0.8310175524134743, -0.07057738183256172, -0.551750542142352],
    [0.8310175524134743, 0.551750542142352, 0.07057738183256172],
    [-0.8310175524134743, 0.551750542142352, 0.07057738183256172],
    [0.8310175524134743, -0.551750542142352, 0.07057738183256172],
    [-0.8310175524134743, -0.551750542142352, 0.07057738183256172],
    [0.8310175524134743, 0.551750542142352, -0.07057738183256172],
    [-0.8310175524134743, 0.551750542142352, -0.07057738183256172],
    [0.8310175524134743, -0.551750542142352, -0.07057738183256172],
    [-0.8310175524134743, -0.551750542142352, -0.07057738183256172],
    [0.2783888477882155, 0.6029619156159187, 0.7476206108340857],
    [-0.2783888477882155, 0.6029619156159187, 0.7476206108340857],
    [0.2783888477882155, -0.6029619156159187, 0.7476206108340857],
    [-0.2783888477882155, -0.6029619156159187, 0.7476206108340857],
    [0.2783888477882155, 0.6029619156159187, -0.7476206108340857],
    [-0.2783888477882155, 0.6029619156159187, -0.7476206108340857],
    [0.2783888477882155, -0.6029619156159187, -0.7476206108340857],
    [-0.2783888477882155, -0.6029619156159187, -0.7476206108340857],
    [0.2783888477882155, 0.7476206108340857, 0.6029619156159187],
    [-0.2783888477882155, 0.7476206108340857, 0.6029619156159187],
    [0.2783888477882155, -0.7476206108340857, 0.6029619156159187],
    [-0.2783888477882155, -0.7476206108340857, 0.6029619156159187],
    [0.2783888477882155, 0.7476206108340857, -0.6029619156159187],
    [-0.2783888477882155, 0.7476206108340857, -0.6029619156159187],
    [0.2783888477882155, -0.7476206108340857, -0.6029619156159187],
    [-0.2783888477882155, -0.7476206108340857, -0.6029619156159187],
    [0.6029619156159187, 0.2783888477882155, 0.7476206108340857],
    [-0.6029619156159187, 0.2783888477882155, 0.7476206108340857],
    [0.6029619156159187, -0.2783888477882155, 0.7476206108340857],
    [-0.6029619156159187, -0.2783888477882155, 0.7476206108340857],
    [0.6029619156159187, 0.2783888477882155, -0.7476206108340857],
    [-0.6029619156159187, 0.2783888477882155, -0.7476206108340857],
    [0.6029619156159187, -0.2783888477882155, -0.7476206108340857],
    [-0.6029619156159187, -0.2783888477882155, -0.7476206108340857],
    [0.6029619156159187, 0.7476206108340857, 0.2783888477882155],
    [-0.6029619156159187, 0.7476206108340857, 0.2783888477882155],
    [0.6029619156159187, -0.7476206108340857, 0.2783888477882155],
    [-0.6029619156159187, -0.7476206108340857, 0.2783888477882155],
    [0.6029619156159187, 0.7476206108340857, -0.2783888477882155],
    [-0.6029619156159187, 0.7476206108340857, -0.2783888477882155],
    [0.6029619156159187, -0.7476206108340857, -0.2783888477882155],
    [-0.6029619156159187, -0.7476206108340857, -0.2783888477882155],
    [0.7476206108340857, 0.2783888477882155, 0.6029619156159187],
    [-0.7476206108340857, 0.2783888477882155, 0.6029619156159187],
    [0.7476206108340857, -0.2783888477882155, 0.6029619156159187],
    [-0.7476206108340857, -0.2783888477882155, 0.6029619156159187],
    [0.7476206108340857, 0.2783888477882155, -0.6029619156159187],
    [-0.7476206108340857, 0.2783888477882155, -0.6029619156159187],
    [0.7476206108340857, -0.2783888477882155, -0.6029619156159187],
    [-0.7476206108340857, -0.2783888477882155, -0.6029619156159187],
    [0.7476206108340857, 0.6029619156159187, 0.2783888477882155],
    [-0.7476206108340857, 0.6029619156159187, 0.2783888477882155],
    [0.7476206108340857, -0.6029619156159187, 0.2783888477882155],
    [-0.7476206108340857, -0.6029619156159187, 0.2783888477882155],
    [0.7476206108340857, 0.6029619156159187, -0.2783888477882155],
    [-0.7476206108340857, 0.6029619156159187, -0.2783888477882155],
    [0.7476206108340857, -0.6029619156159187, -0.2783888477882155],
    [-0.7476206108340857, -0.6029619156159187, -0.2783888477882155],
    [0.1979578938917407, 0.3589606329589096, 0.9121183784091215],
    [-0.1979578938917407, 0.3589606329589096, 0.9121183784091215],
    [0.1979578938917407, -0.3589606329589096, 0.9121183784091215],
    [-0.1979578938917407, -0.3589606329589096, 0.9121183784091215],
    [0.1979578938917407, 0.3589606329589096, -0.9121183784091215],
    [-0.1979578938917407, 0.3589606329589096, -0.9121183784091215],
    [0.1979578938917407, -0.3589606329589096, -0.9121183784091215],
    [-0.1979578938917407, -0.3589606329589096, -0.9121183784091215],
    [0.1979578938917407, 0.9121183784091215, 0.3589606329589096],
    [-0.1979578938917407, 0.9121183784091215, 0.3589606329589096],
    [0.1979578938917407, -0.9121183784091215, 0.3589606329589096],
    [-0.1979578938917407, -0.9121183784091215, 0.3589606329589096],
    [0.1979578938917407, 0.9121183784091215, -0.3589606329589096],
    [-0.1979578938917407, 0.9121183784091215, -0.3589606329589096],
    [0.1979578938917407, -0.9121183784091215, -0.3589606329589096],
    [-0.1979578938917407, -0.9121183784091215, -0.3589606329589096],
    [0.3589606329589096, 0.1979578938917407, 0.9121183784091215],
    [-0.3589606329589096, 0.1979578938917407, 0.9121183784091215],
    [0.3589606329589096, -0.1979578938917407, 0.9121183784091215],
    [-0.3589606329589096, -0.1979578938917407, 0.9121183784091215],
    [0.3589606329589096, 0.1979578938917407, -0.9121183784091215],
    [-0.3589606329589096, 0.1979578938917407, -0.9121183784091215],
    [0.3589606329589096, -0.1979578938917407, -0.9121183784091215],
    [-0.3589606329589096, -0.1979578938917407, -0.9121183784091215],
    [0.3589606329589096, 0.9121183784091215, 0.1979578938917407],
    [-0.3589606329589096, 0.9121183784091215, 0.1979578938917407],
    [0.3589606329589096, -0.9121183784091215, 0.1979578938917407],
    [-0.3589606329589096, -0.9121183784091215, 0.1979578938917407],
    [0.3589606329589096, 0.9121183784091215, -0.1979578938917407],
    [-0.3589606329589096, 0.9121183784091215, -0.1979578938917407],
    [0.3589606329589096, -0.9121183784091215, -0.1979578938917407],
    [-0.3589606329589096, -0.9121183784091215, -0.1979578938917407],
    [0.9121183784091215, 0.1979578938917407, 0.3589606329589096],
    [-0.9121183784091215, 0.1979578938917407, 0.3589606329589096],
    [0.9121183784091215, -0.1979578938917407, 0.3589606329589096],
    [-0.9121183784091215, -0.1979578938917407, 0.3589606329589096],
    [0.9121183784091215, 0.1979578938917407, -0.3589606329589096],
    [-0.9121183784091215, 0.1979578938917407, -0.3589606329589096],
    [0.9121183784091215, -0.1979578938917407, -0.3589606329589096],
    [-0.9121183784091215, -0.1979578938917407, -0.3589606329589096],
    [0.9121183784091215, 0.3589606329589096, 0.1979578938917407],
    [-0.9121183784091215, 0.3589606329589096, 0.1979578938917407],
    [0.9121183784091215, -0.3589606329589096, 0.1979578938917407],
    [-0.9121183784091215, -0.3589606329589096, 0.1979578938917407],
    [0.9121183784091215, 0.3589606329589096, -0.1979578938917407],
    [-0.9121183784091215, 0.3589606329589096, -0.1979578938917407],
    [0.9121183784091215, -0.3589606329589096, -0.1979578938917407],
    [-0.9121183784091215, -0.3589606329589096, -0.1979578938917407],
    [0.2087307061103274, 0.5348666438135476, 0.8187485362810218],
    [-0.2087307061103274, 0.5348666438135476, 0.8187485362810218],
    [0.2087307061103274, -0.5348666438135476, 0.8187485362810218],
    [-0.2087307061103274, -0.5348666438135476, 0.8187485362810218],
    [0.2087307061103274, 0.5348666438135476, -0.8187485362810218],
    [-0.2087307061103274, 0.5348666438135476, -0.8187485362810218],
    [0.2087307061103274, -0.5348666438135476, -0.8187485362810218],
    [-0.2087307061103274, -0.5348666438135476, -0.8187485362810218],
    [0.2087307061103274, 0.8187485362810218, 0.5348666438135476],
    [-0.2087307061103274, 0.8187485362810218, 0.5348666438135476],
    [0.2087307061103274, -0.8187485362810218, 0.5348666438135476],
    [-0.2087307061103274, -0.8187485362810218, 0.5348666438135476],
    [0.2087307061103274, 0.8187485362810218, -0.5348666438135476],
    [-0.2087307061103274, 0.8187485362810218, -0.5348666438135476],
    [0.2087307061103274, -0.8187485362810218, -0.5348666438135476],
    [-0.2087307061103274, -0.8187485362810218, -0.5348666438135476],
    [0.5348666438135476, 0.2087307061103274, 0.8187485362810218],
    [-0.5348666438135476, 0.2087307061103274, 0.8187485362810218],
    [0.5348666438135476, -0.2087307061103274, 0.8187485362810218],
    [-0.5348666438135476, -0.2087307061103274, 0.8187485362810218],
    [0.5348666438135476, 0.2087307061103274, -0.8187485362810218],
    [-0.5348666438135476, 0.2087307061103274, -0.8187485362810218],
    [0.5348666438135476, -0.2087307061103274, -0.8187485362810218],
    [-0.5348666438135476, -0.2087307061103274, -0.8187485362810218],
    [0.5348666438135476, 0.8187485362810218, 0.2087307061103274],
    [-0.5348666438135476, 0.8187485362810218, 0.2087307061103274],
    [0.5348666438135476, -0.8187485362810218, 0.2087307061103274],
    [-0.5348666438135476, -0.8187485362810218, 0.2087307061103274],
    [0.5348666438135476, 0.8187485362810218, -0.2087307061103274],
    [-0.5348666438135476, 0.8187485362810218, -0.2087307061103274],
    [0.5348666438135476, -0.8187485362810218, -0.2087307061103274],
    [-0.5348666438135476, -0.8187485362810218, -0.2087307061103274],
    [0.8187485362810218, 0.2087307061103274, 0.5348666438135476],
    [-0.8187485362810218, 0.2087307061103274, 0.5348666438135476],
    [0.8187485362810218, -0.2087307061103274, 0.5348666438135476],
    [-0.8187485362810218, -0.2087307061103274, 0.5348666438135476],
    [0.8187485362810218, 0.2087307061103274, -0.5348666438135476],
    [-0.8187485362810218, 0.2087307061103274, -0.5348666438135476],
    [0.8187485362810218, -0.2087307061103274, -0.5348666438135476],
    [-0.8187485362810218, -0.2087307061103274, -0.5348666438135476],
    [0.8187485362810218, 0.5348666438135476, 0.2087307061103274],
    [-0.8187485362810218, 0.5348666438135476, 0.2087307061103274],
    [0.8187485362810218, -0.5348666438135476, 0.2087307061103274],
    [-0.8187485362810218, -0.5348666438135476, 0.2087307061103274],
    [0.8187485362810218, 0.5348666438135476, -0.2087307061103274],
    [-0.8187485362810218, 0.5348666438135476, -0.2087307061103274],
    [0.8187485362810218, -0.5348666438135476, -0.2087307061103274],
    [-0.8187485362810218, -0.5348666438135476, -0.2087307061103274],
    [0.4055122137872836, 0.5674997546074373, 0.7165918454670238],
    [-0.4055122137872836, 0.5674997546074373, 0.7165918454670238],
    [0.4055122137872836, -0.5674997546074373, 0.7165918454670238],
    [-0.4055122137872836, -0.5674997546074373, 0.7165918454670238],
    [0.4055122137872836, 0.5674997546074373, -0.7165918454670238],
    [-0.4055122137872836, 0.5674997546074373, -0.7165918454670238],
    [0.4055122137872836, -0.5674997546074373, -0.7165918454670238],
    [-0.4055122137872836, -0.5674997546074373, -0.7165918454670238],
    [0.4055122137872836, 0.7165918454670238, 0.5674997546074373],
    [-0.4055122137872836, 0.7165918454670238, 0.5674997546074373],
    [0.4055122137872836, -0.7165918454670238, 0.5674997546074373],
    [-0.4055122137872836, -0.7165918454670238, 0.5674997546074373],
    [0.4055122137872836, 0.7165918454670238, -0.5674997546074373],
    [-0.4055122137872836, 0.7165918454670238, -0.5674997546074373],
    [0.4055122137872836, -0.7165918454670238, -0.5674997546074373],
    [-0.4055122137872836, -0.7165918454670238, -0.5674997546074373],
    [0.5674997546074373, 0.4055122137872836, 0.7165918454670238],
    [-0.5674997546074373, 0.4055122137872836, 0.7165918454670238],
    [0.5674997546074373, -0.4055122137872836, 0.7165918454670238],
    [-0.5674997546074373, -0.4055122137872836, 0.7165918454670238],
    [0.5674997546074373, 0.4055122137872836, -0.7165918454670238],
    [-0.5674997546074373, 0.4055122137872836, -0.7165918454670238],
    [0.5674997546074373, -0.4055122137872836, -0.7165918454670238],
    [-0.5674997546074373, -0.4055122137872836, -0.7165918454670238],
    [0.5674997546074373, 0.7165918454670238, 0.4055122137872836],
    [-0.5674997546074373, 0.7165918454670238, 0.4055122137872836],
    [0.5674997546074373, -0.7165918454670238, 0.4055122137872836],
    [-0.5674997546074373, -0.7165918454670238, 0.4055122137872836],
    [0.5674997546074373, 0.7165918454670238, -0.4055122137872836],
    [-0.5674997546074373, 0.7165918454670238, -0.4055122137872836],
    [0.5674997546074373, -0.7165918454670238, -0.4055122137872836],
    [-0.5674997546074373, -0.7165918454670238, -0.4055122137872836],
    [0.7165918454670238, 0.4055122137872836, 0.5674997546074373],
    [-0.7165918454670238, 0.4055122137872836, 0.5674997546074373],
    [0.7165918454670238, -0.4055122137872836, 0.5674997546074373],
    [-0.7165918454670238, -0.4055122137872836, 0.5674997546074373],
    [0.7165918454670238, 0.4055122137872836, -0.5674997546074373],
    [-0.7165918454670238, 0.4055122137872836, -0.5674997546074373],
    [0.7165918454670238, -0.4055122137872836, -0.5674997546074373],
    [-0.7165918454670238, -0.4055122137872836, -0.5674997546074373],
    [0.7165918454670238, 0.5674997546074373, 0.4055122137872836],
    [-0.7165918454670238, 0.5674997546074373, 0.4055122137872836],
    [0.7165918454670238, -0.5674997546074373, 0.4055122137872836],
    [-0.7165918454670238, -0.5674997546074373, 0.4055122137872836],
    [0.7165918454670238, 0.5674997546074373, -0.4055122137872836],
    [-0.7165918454670238, 0.5674997546074373, -0.4055122137872836],
    [0.7165918454670238, -0.5674997546074373, -0.4055122137872836],
    [-0.7165918454670238, -0.5674997546074373, -0.4055122137872836],
];
