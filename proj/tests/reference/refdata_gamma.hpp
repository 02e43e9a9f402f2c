// Generated by generate_reference.py -- do not edit by hand.
// Reference values computed with mpmath (40+ significant digits).
#pragma once

namespace invosc_ref {

struct ComplexPointValue { double re, im, value_re, value_im; };

inline constexpr ComplexPointValue kLogGamma[] = {
  {-49.5, 0.0, -145.37452560487122, -157.07963267948966},
  {-49.5, 0.5, -146.29198113007973, -155.12360451177517},
  {-49.5, 3.0, -154.01621330280534, -145.34171578669157},
  {-49.5, 20.0, -203.61371901138173, -78.32936632195374},
  {-49.5, 200.0, -578.6674943041663, 774.9373820738},
  {-49.5, -0.5, -146.29198113007973, 155.12360451177517},
  {-49.5, -3.0, -154.01621330280534, 145.34171578669157},
  {-49.5, -20.0, -203.61371901138173, 78.32936632195374},
  {-49.5, -200.0, -578.6674943041663, -774.9373820738},
  {-10.25, 0.0, -14.20399790093109, -34.55751918948773},
  {-10.25, 0.5, -15.417538111779605, -32.627495417936075},
  {-10.25, 3.0, -22.869147872388623, -26.608339069853805},
  {-10.25, 20.0, -63.17829678143959, 20.26628792781031},
  {-10.25, 200.0, -370.2023991072583, 842.4888532308966},
  {-10.25, -0.5, -15.417538111779605, 32.627495417936075},
  {-10.25, -3.0, -22.869147872388623, 26.608339069853805},
  {-10.25, -20.0, -63.17829678143959, -20.26628792781031},
  {-10.25, -200.0, -370.2023991072583, -842.4888532308966},
  {-3.5, 0.0, -1.309006684993042, -12.566370614359172},
  {-3.5, 0.5, -2.197949943452405, -11.870658484233088},
  {-3.5, 3.0, -9.006414489735528, -8.15907065337251},
  {-3.5, 20.0, -42.505868919109744, 33.236088498964925},
  {-3.5, 200.0, -334.4338587616207, 853.3404989190043},
  {-3.5, -0.5, -2.197949943452405, 11.870658484233088},
  {-3.5, -3.0, -9.006414489735528, 8.15907065337251},
  {-3.5, -20.0, -42.505868919109744, -33.236088498964925},
  {-3.5, -200.0, -334.4338587616207, -853.3404989190043},
  {-0.75, 0.0, 1.5757045971498584, -3.141592653589793},
  {-0.75, 0.5, 0.44407010279754205, -3.748773059929816},
  {-0.75, 3.0, -5.196144008713739, -1.9091593033149301},
  {-0.75, 20.0, -34.242336436824864, 37.91418847822034},
  {-0.75, 200.0, -319.863230369847, 857.696280002044},
  {-0.75, -0.5, 0.44407010279754205, 3.748773059929816},
  {-0.75, -3.0, -5.196144008713739, 1.9091593033149301},
  {-0.75, -20.0, -34.242336436824864, -37.91418847822034},
  {-0.75, -200.0, -319.863230369847, -857.696280002044},
  {0.25, 0.0, 1.2880225246980774, 0.0},
  {0.25, 0.5, 0.3402504204084198, -1.1951830098875904},
  {0.25, 3.0, -4.067219409137412, -0.09338431339316938},
  {0.25, 20.0, -31.24590153219264, 39.5224672417069},
  {0.25, 200.0, -314.5649059720984, 859.270826311261},
  {0.25, -0.5, 0.3402504204084198, 1.1951830098875904},
  {0.25, -3.0, -4.067219409137412, 0.09338431339316938},
  {0.25, -20.0, -31.24590153219264, -39.5224672417069},
  {0.25, -200.0, -314.5649059720984, -859.270826311261},
  {0.5, 0.0, 0.5723649429247001, 0.0},
  {0.5, 0.5, 0.11238724280962312, -0.7507292021220507},
  {0.5, 3.0, -3.793450450436223, 0.30981927108643914},
  {0.5, 20.0, -30.49698800269326, 39.91672910847333},
  {0.5, 200.0, -313.2403268257747, 859.6636816432444},
  {0.5, -0.5, 0.11238724280962312, 0.7507292021220507},
  {0.5, -3.0, -3.793450450436223, -0.30981927108643914},
  {0.5, -20.0, -30.49698800269326, -39.91672910847333},
  {0.5, -200.0, -313.2403268257747, -859.6636816432444},
  {1.0, 0.0, 0.0, 0.0},
  {1.0, 0.5, -0.19094549918677936, -0.24405829890542777},
  {1.0, 3.0, -3.244144299589756, 1.0533507710686132},
  {1.0, 20.0, -28.999121865916266, 40.695876620339895},
  {1.0, 200.0, -310.59116814250063, 860.4484548059909},
  {1.0, -0.5, -0.19094549918677936, 0.24405829890542777},
  {1.0, -3.0, -3.244144299589756, -1.0533507710686132},
  {1.0, -20.0, -28.999121865916266, -40.695876620339895},
  {1.0, -200.0, -310.59116814250063, -860.4484548059909},
  {2.0, 0.0, 0.0, 0.0},
  {2.0, 0.5, -0.07937372352967449, 0.21958931009537835},
  {2.0, 3.0, -2.0928517530927335, 2.302396543466868},
  {2.0, 20.0, -26.00214115226298, 42.21671455141285},
  {2.0, 200.0, -305.29283827610885, 862.0142511744518},
  {2.0, -0.5, -0.07937372352967449, -0.21958931009537835},
  {2.0, -3.0, -2.0928517530927335, -2.302396543466868},
  {2.0, -20.0, -26.00214115226298, -42.21671455141285},
  {2.0, -200.0, -305.29283827610885, -862.0142511744518},
  {3.75, 0.0, 1.486815578593417, 0.0},
  {3.75, 0.5, 1.448791889390188, 0.5931838673302331},
  {3.75, 3.0, 0.2578643995594775, 3.8894024443174153},
  {3.75, 20.0, -20.746996602599648, 44.75885107335683},
  {3.75, 200.0, -296.02065574650663, 864.7423645623562},
  {3.75, -0.5, 1.448791889390188, -0.5931838673302331},
  {3.75, -3.0, 0.2578643995594775, -3.8894024443174153},
  {3.75, -20.0, -20.746996602599648, -44.75885107335683},
  {3.75, -200.0, -296.02065574650663, -864.7423645623562},
  {16.5, 0.0, 29.277754515040815, 0.0},
  {16.5, 0.5, 29.2699458233027, 1.3864569629734877},
  {16.5, 3.0, 28.998218045979296, 8.335633340166458},
  {16.5, 20.0, 18.88610076314132, 59.19976430434949},
  {16.5, 200.0, -228.450231523596, 884.1571024721052},
  {16.5, -0.5, 29.2699458233027, -1.3864569629734877},
  {16.5, -3.0, 28.998218045979296, -8.335633340166458},
  {16.5, -20.0, 18.88610076314132, -59.19976430434949},
  {16.5, -200.0, -228.450231523596, -884.1571024721052},
  {50.0, 0.0, 144.5657439463449, 0.0},
  {50.0, 0.5, 144.56321882262313, 1.9510033381202367},
  {50.0, 3.0, 144.47489350685507, 11.70780336070969},
  {50.0, 20.0, 140.62878166053335, 78.55915113033542},
  {50.0, 200.0, -50.477327126888966, 931.3535176857205},
  {50.0, -0.5, 144.56321882262313, -1.9510033381202367},
  {50.0, -3.0, 144.47489350685507, -11.70780336070969},
  {50.0, -20.0, 140.62878166053335, -78.55915113033542},
  {50.0, -200.0, -50.477327126888966, -931.3535176857205},
};

struct OrderArgValue2 { double a, x, value; };
inline constexpr OrderArgValue2 kGammaAbsSq[] = {
  {0.25, 0.0, 13.145047206596875},
  {0.25, 0.7, 0.8668107570914282},
  {0.25, 1.0, 0.2767245678645023},
  {0.25, 2.3, 0.003023958557941611},
  {0.25, 3.0, 0.0002932635637583816},
  {0.25, 10.0, 4.513197044053573e-14},
  {0.25, 60.0, 1.1130762025900057e-82},
  {0.5, 0.0, 3.141592653589793},
  {0.5, 0.7, 0.688347235723248},
  {0.5, 1.0, 0.27101495139941834},
  {0.5, 2.3, 0.004572082144486264},
  {0.5, 3.0, 0.0005070500197921},
  {0.5, 10.0, 1.4269748863613808e-13},
  {0.5, 60.0, 8.621813768609443e-82},
  {0.75, 0.0, 1.5016460946806298},
  {0.75, 0.7, 0.5600707078579206},
  {0.75, 1.0, 0.26641446216607423},
  {0.75, 2.3, 0.0069127790188929505},
  {0.75, 3.0, 0.0008766848585788548},
  {0.75, 10.0, 4.5117846759847894e-13},
  {0.75, 60.0, 6.678399240556256e-81},
};

}  // namespace invosc_ref
