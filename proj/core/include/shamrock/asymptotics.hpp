#pragma once

namespace shamrock {

// Floating-point evaluations through log-gamma sums; arguments may be large.

/// sqrt(3)^(m^2) / (2 pi)^m * H(m)^4 / H(2m).
double omega_single(int m);

/// M(SC_{x,x,x}(m,0,0,m)) / M(hexagon of side x+m), from the product formulas.
double omega_finite(int m, int x);

/// H(N)H(N+a+b)H(N+a+c)H(N+b+c) / (H(N+a)H(N+b)H(N+c)H(N+a+b+c)).
double glaisher_ratio(int N, int a, int b, int c);

/// M(SC_{N,N,N}(a,b,c,m)) / M(SC_{N,N,N}(a+b+c,0,0,m)), from the product formulas.
double finite_shamrock_ratio(int a, int b, int c, int m, int N);

}  // namespace shamrock
