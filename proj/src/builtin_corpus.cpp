#include "floorcheck/corpus.hpp"

namespace floorcheck {

namespace {

// Transcription of the 43 theorem statements and the base inequality each
// proof substitutes into.  Base records whose source text is damaged carry
// garbled: true, a best-effort corrected statement and a note quoting the
// damage; theorem records keep the statement exactly as printed, with a
// corrected form only where the intended constant/term is recoverable from
// the substituted base (T3, T21, T43).
constexpr const char* kBuiltinCorpusText = R"CORPUS(
# --- base inequalities -------------------------------------------------

id: B1
statement: a/(a+2*b+2*c) + b/(2*a+b+2*c) + c/(2*a+2*b+c) >= 3/5 on a>0, b>=0, c>=0

id: B2
statement: a/(u*b+v*c) + b/(u*c+v*a) + c/(u*a+v*b) >= 3/(u+v) on a>0, b>0, c>0, u>=0, v>=0

id: B3
statement: x/(a*x+y+z) + y/(x+a*y+z) + z/(x+y+a*z) <= 3/(a+2) on x>0, y>=0, z>=0, a>=1
note: equality holds for every (x,y,z) when a=1, so margins vanish identically on that slice.

id: B4
statement: x/(x*y+x+1) + y/(y*z+y+1) + z/(z*x+z+1) <= 1 on x>=0, y>=0, z>=0

id: B5
statement: x^2/(y*(x^2+x*y+y^2)) + y^2/(z*(y^2+y*z+z^2)) + z^2/(x*(z^2+z*x+x^2)) >= 3/(x+y+z) on x>0, y>0, z>0

id: B6
statement: (a^2+b*c)/(b+c) + (b^2+c*a)/(c+a) + (c^2+a*b)/(a+b) >= a+b+c on a>0, b>=0, c>=0

id: B7
statement: a^3/(a^2+a*b+b^2) + b^3/(b^2+b*c+c^2) + c^3/(c^2+c*a+a^2) >= (a+b+c)/3 on a>0, b>=0, c>=0

id: B8
statement: 1/(a^3+b^3+a*b*c) + 1/(b^3+c^3+a*b*c) + 1/(c^3+a^3+a*b*c) <= 1/(a*b*c) on a>0, b>0, c>0

id: B9
statement: (-a+b+c)^3/a + (-b+c+a)^3/b + (-c+a+b)^3/c >= a^2+b^2+c^2 on a>0, b>0, c>0

id: B10
statement: a^3/(b^2-b*c+c^2) + b^3/(c^2-c*a+a^2) + c^3/(a^2-a*b+b^2) >= 3*(a*b+b*c+c*a)/(a+b+c) on a>0, b>=0, c>=0

id: B11
statement: abs((a-b)/(a+b) + (b-c)/(b+c) + (c-a)/(c+a)) < 1 on a>0, b>=0, c>=0

id: B12
statement: sqrt(x/(y+z)) + sqrt(y/(z+x)) + sqrt(z/(x+y)) > 2 on x>0, y>=0, z>=0

id: B13
statement: (a+b+c)*(1/a+1/b+1/c) >= 3*(1+cbrt((a+b)*(b+c)*(c+a)/(a*b*c))) on a>0, b>0, c>0

id: B14
statement: sqrt(x*y) + sqrt(y*z) + sqrt(z*x) >= 2*root4(x*y*z*(x+y+z)) on x>=0, y>=0, z>=0

id: B15
statement: (x*y+y*z+z*x)^2 >= 3*x*y*z*(x+y+z) on x>=0, y>=0, z>=0

id: B16
statement: x*y+y*z+z*x >= x*sqrt(y*z) + y*sqrt(z*x) + z*sqrt(x*y) on x>=0, y>=0, z>=0

id: B17
statement: sqrt(x*(y+z)) + sqrt(y*(z+x)) + sqrt(z*(x+y)) <= sqrt(2)*(x+y+z) on x>=0, y>=0, z>=0

id: B18
statement: a/(b+c) + b/(c+a) + c/(a+b) >= 3/2 on a>0, b>=0, c>=0

id: B19
statement: (x+y)^3 + (y+z)^3 + (z+x)^3 >= 21*x*y*z + x^3 + y^3 + z^3 on x>=0, y>=0, z>=0

id: B20
statement: sqrt((x+y)/(x+z)) + sqrt((x+z)/(x+y)) <= (y+z)/sqrt(y*z) on x>=0, y>0, z>0

id: B21
statement: 2*(1/(x+y) + 1/(y+z) + 1/(z+x)) >= 9/(x+y+z) on x>0, y>=0, z>=0

id: B22
statement: x^2/y^2 + y^2/z^2 + z^2/x^2 >= x/z + y/x + z/y on x>0, y>0, z>0

id: B23
statement: x^2+y^2+z^2 - (x*y+y*z+z*x) >= 3/4*max((x-y)^2, (y-z)^2, (z-x)^2) on x in R, y in R, z in R

id: B24
statement: exp(y) + exp(z) >= 2 + y + z on y in R, z in R

id: B25
statement: abs(sin(a)) + abs(sin(b)) + abs(cos(a+b)) >= 1 on a in R, b in R

id: B26
statement: (a^2+a*b+b^2)*(b^2+b*c+c^2)*(c^2+c*a+a^2) >= (a*b+b*c+c*a)^3 on a>=0, b>=0, c>=0

id: B27
statement: (x+y+z)*(x/((2*x+y+z)*(y+z)) + y/((2*y+z+x)*(z+x)) + z/((2*z+x+y)*(x+y))) >= 9/8 on x>0, y>=0, z>=0

id: B28
statement: x^2/((x+y)*(x+z)) + y^2/((y+z)*(y+x)) + z^2/((z+x)*(z+y)) >= 3/4 on x>0, y>=0, z>=0

id: B29
statement: sqrt((y+z)/x) + sqrt((z+x)/y) + sqrt((x+y)/z) >= sqrt(2)*(sqrt(x/(y+z)) + sqrt(y/(z+x)) + sqrt(z/(x+y))) on x>0, y>0, z>0
garbled: true
note: source proof line prints the relation as <=, which fails at x=y=z; encoded with >=, the direction the theorem needs.

id: B30
statement: (y+z)/x + (z+x)/y + (x+y)/z >= 4*(x/(y+z) + y/(z+x) + z/(x+y)) on x>0, y>0, z>0

id: B31
statement: sqrt(a+b+c) + sqrt(b+c) + sqrt(c) >= sqrt(a+4*b+9*c) on a>=0, b>=0, c>=0

id: B32
statement: min(abs(sin(a)) + abs(sin(b)) - abs(sin(a+b)), abs(cos(a)) + abs(cos(b)) - abs(cos(a+b))) >= 0 on a in R, b in R
note: the sine component is the classical subadditivity bound; the cosine component is false for general (a,b), e.g. a=b near pi/2.

id: B33
statement: 3*(a+b+c)*(1/a+1/b+1/c) >= (cbrt(a/b) + cbrt(b/c) + cbrt(c/a))^3 on a>0, b>0, c>0

id: B34
statement: a/(b+c)^2 + b/(c+a)^2 + c/(a+b)^2 >= 9/(4*(a+b+c)) on a>0, b>=0, c>=0

id: B35
statement: a*(a+b)/((b+c)*(2*a+b+c)) + b*(b+c)/((c+a)*(2*b+c+a)) + c*(c+a)/((a+b)*(2*c+a+b)) >= 3/4 on a>0, b>=0, c>=0

id: B36
statement: a*b/(a+b+2*c) + b*c/(b+c+2*a) + c*a/(c+a+2*b) <= (a+b+c)/4 on a>0, b>=0, c>=0

id: B37
statement: (a^5-a^2+3)*(b^5-b^2+3)*(c^5-c^2+3) >= (a+b+c)^3 on a>=0, b>=0, c>=0

id: B38
statement: (2*a+b+c)^2/(2*a^2+(b+c)^2) + (2*b+c+a)^2/(2*b^2+(c+a)^2) + (2*c+a+b)^2/(2*c^2+(a+b)^2) <= 8 on a>0, b>=0, c>=0

id: B39
statement: a + sqrt(a*b) + cbrt(a*b*c) <= 3*cbrt(a*((a+b)/2)*((a+b+c)/3)) on a>=0, b>=0, c>=0
garbled: true
note: source proof line prints cbrt(abx) on the left, a factor (a+b+c)/b on the right and a stray /2; encoded form reproduces the theorem's three claims.

id: B40
statement: (a+b)^4 + (b+c)^4 + (c+a)^4 >= 4/7*(a^4+b^4+c^4) on a>=0, b>=0, c>=0

id: B41
statement: (b+c-a)^2/((b+c)^2+a^2) + (c+a-b)^2/((c+a)^2+b^2) + (a+b-c)^2/((a+b)^2+c^2) >= 3/5 on a>0, b>=0, c>=0

id: B42
statement: sqrt(2*a/(a+b)) + sqrt(2*b/(b+c)) + sqrt(2*c/(c+a)) <= 3 on a>0, b>=0, c>=0
garbled: true
note: source proof line drops the radicals (prints sum of 2a/(a+b) <= 3, false at (1,4,2)); encoded with the radicals the theorem carries.

id: B43
statement: (x*y+y*z+z*x)*(1/(x+y)^2 + 1/(y+z)^2 + 1/(z+x)^2) >= 9/4 on x>=0, y>=0, z>=0
note: equality also holds on the degenerate family (t,0,t), which is the branch-0 image of T43.

# --- theorems ----------------------------------------------------------

id: T1
statement: floor(x)/(3*x+frac(x)) + frac(x)/(3*x+floor(x)) >= 4/15 on x>0
base: B1
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the substituted base's first term is identically 1/3; the theorem is the base instance minus 1/3 on both sides.

id: T2
statement: a/(floor(x)*b+frac(x)*c) + b/(floor(x)*c+frac(x)*a) + c/(floor(x)*a+frac(x)*b) >= 3/x on x>0, a>0, b>0, c>0
base: B2
subst: u=floor(x), v=frac(x), a=a, b=b, c=c
mode: verbatim
note: margin vanishes identically on the symmetric slice a=b=c.

id: T3
statement: floor(x)/((a+1)*floor(x)+2*frac(x)) + floor(x)/((a+1)*frac(x)+2*floor(x)) <= (2*a+1)/((a+1)*(a+2)) on x>0, a>=1
corrected: floor(x)/((a+1)*floor(x)+2*frac(x)) + frac(x)/((a+1)*frac(x)+2*floor(x)) <= (2*a+1)/((a+1)*(a+2)) on x>0, a>=1
base: B3
subst: x=x, y=floor(x), z=frac(x), a=a
mode: simplified
note: suspected transcription slip; printed second numerator is floor(x) where the substituted base yields frac(x), and the printed form fails at a=1, x=1.5. corrected stores the frac(x) numerator; at a=1 the corrected margin is identically zero (equality slice of the base).

id: T4
statement: floor(x)*(1/(x*floor(x)+x+1) + 1/(floor(x)*frac(x)+floor(x)+1)) + frac(x)*(1/(x*floor(x)+x+1) + 1/(x*frac(x)+frac(x)+1)) <= 1 on x>0
base: B4
subst: x=x, y=floor(x), z=frac(x)
mode: verbatim
note: printed form regroups the base instance terms over the common first denominator; values agree pointwise.

id: T5
statement: x^3/(floor(x)*(3*floor(x)^2+3*floor(x)*frac(x)+frac(x)^2)) + x*floor(x)^2/(frac(x)*(floor(x)^2+floor(x)*frac(x)+frac(x)^2)) + x*frac(x)^2/(floor(x)^2+3*floor(x)*frac(x)+3*frac(x)^2) >= 3/2 on x>0
base: B5
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: printed third numerator carries a factor x the substituted base does not produce; harmless where the statement is defined (x >= 1). branch 0 divides by floor(x)=0 and integer points divide by frac(x)=0.

id: T6
statement: 1/(floor(x)+2*frac(x)) + 1/(2*floor(x)+frac(x)) >= 1/x on x>0
base: B6
subst: a=x, b=floor(x), c=frac(x)
mode: simplified

id: T7
statement: floor(x)^3/(floor(x)^2+floor(x)*frac(x)+frac(x)^2) + frac(x)^3/(3*frac(x)^2+3*floor(x)*frac(x)+floor(x)^2) >= x*(3*floor(x)^2-frac(x)^2)/(3*(3*floor(x)^2+3*floor(x)*frac(x)+frac(x)^2)) on x>0
base: B7
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the theorem is the base instance with the first term moved to the right-hand side.

id: T8
statement: 1/(2*floor(x)^3+4*floor(x)^2*frac(x)+4*floor(x)*frac(x)^2+frac(x)^3) + 1/(floor(x)^3+floor(x)^2*frac(x)+floor(x)*frac(x)^2+frac(x)^3) + 1/(floor(x)^3+4*floor(x)^2*frac(x)+4*floor(x)*frac(x)^2+2*frac(x)^3) <= 1/(x*floor(x)*frac(x)) on x>0
base: B8
subst: a=x, b=floor(x), c=frac(x)
mode: verbatim
note: denominators are the expanded forms of a^3+b^3+abc under the substitution. branch 0 and integer points make the right-hand side divide by zero.

id: T9
statement: 4*(floor(x)^3/frac(x) + frac(x)^3/floor(x)) >= floor(x)^2+floor(x)*frac(x)+frac(x)^2 on x>1, x notin Z
base: B9
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: domain amended with x notin Z (frac(x) appears in a denominator); the base instance halves because -a+b+c vanishes under the substitution.

id: T10
statement: x^4/(floor(x)^2-floor(x)*frac(x)+frac(x)^2) + x*(floor(x)^3+frac(x)^3)/(floor(x)^2+floor(x)*frac(x)+frac(x)^2) >= 3/2*(x^2+floor(x)*frac(x)) on x>0
base: B10
subst: a=x, b=floor(x), c=frac(x)
mode: simplified

id: T11
statement: abs(floor(x)*frac(x)*(floor(x)-frac(x))/(x*(x+floor(x))*(x+frac(x)))) < 1 on x>0
base: B11
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the base's cyclic sum collapses to a single product under the substitution.

id: T12
statement: sqrt(floor(x)/(x+frac(x))) + sqrt(frac(x)/(x+floor(x))) > 1 on x>0
base: B12
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: on 0<x<1 the left side is identically 1, so the strict claim fails there as an equality; on branches n>=1 the margin tends to 0 as frac(x) tends to 0.

id: T13
statement: 3 + frac(x)/floor(x) + floor(x)/frac(x) >= 3*cbrt((x+floor(x))*(x+frac(x))/(floor(x)*frac(x))) on x>1, x notin Z
base: B13
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: domain amended with x notin Z. the substituted base yields 3 + 2*frac(x)/floor(x) + 2*floor(x)/frac(x) on the left; as printed the ratio terms lack the factor 2 and the statement fails, e.g. at x=1.5.

id: T14
statement: (sqrt(floor(x)) + sqrt(floor(x)*frac(x)/x) + sqrt(frac(x)))^4 >= 32*floor(x)*frac(x) on x>0
base: B14
subst: x=x, y=floor(x), z=frac(x)
mode: simplified

id: T15
statement: (x^2+floor(x)*frac(x))^2 >= 6*x^2*floor(x)*frac(x) on x>0
base: B15
subst: x=x, y=floor(x), z=frac(x)
mode: verbatim

id: T16
statement: x^2 - x*sqrt(floor(x)*frac(x)) + floor(x)*frac(x) >= (floor(x)*sqrt(frac(x)) + frac(x)*sqrt(floor(x)))*sqrt(x) on x>0
base: B16
subst: x=x, y=floor(x), z=frac(x)
mode: simplified

id: T17
statement: sqrt(floor(x)*(x+frac(x))) + sqrt(frac(x)*(x+floor(x))) <= (2*sqrt(2)-1)*x on x>0
base: B17
subst: x=x, y=floor(x), z=frac(x)
mode: simplified

id: T18
statement: floor(x)/(x+frac(x)) + frac(x)/(x+floor(x)) >= 1/2 on x>0
base: B18
subst: a=x, b=floor(x), c=frac(x)
mode: simplified

id: T19
statement: (x+floor(x))^3 + (x+frac(x))^3 >= 21*x*floor(x)*frac(x) + floor(x)^3 + frac(x)^3 on x>0
base: B19
subst: x=x, y=floor(x), z=frac(x)
mode: simplified

id: T20
statement: sqrt((x+floor(x))/(x+frac(x))) + sqrt((x+frac(x))/(x+floor(x))) <= sqrt(floor(x)/frac(x)) + sqrt(frac(x)/floor(x)) on x>1, x notin Z
base: B20
subst: x=x, y=floor(x), z=frac(x)
mode: verbatim
note: domain amended with x notin Z; the printed right side equals the base's (y+z)/sqrt(yz) pointwise.

id: T21
statement: x/(x+floor(x)) + x/(x+frac(x)) >= 5/2 on x>0
corrected: x/(x+floor(x)) + x/(x+frac(x)) >= 5/4 on x>0
base: B21
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: suspected transcription slip; the substituted base gives 9/4 - 1 = 5/4, and the printed constant 5/2 fails for every x > 0 (left side is below 2).

id: T22
statement: frac(x)/floor(x) + (frac(x)/floor(x))^2 + (floor(x)/frac(x))^2 + frac(x)^2/x^2 >= (1/x + 1/frac(x))*floor(x) on x>1, x notin Z
base: B22
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: suspected transcription issue; printed first term is frac(x)/floor(x) where the base yields x^2/floor(x)^2. stored as printed, no corrected form guessed. domain amended with x notin Z.

id: T23
statement: floor(x)^2 - floor(x)*frac(x) + frac(x)^2 >= 3/4*max(floor(x)^2, (floor(x)-frac(x))^2, frac(x)^2) on x>0
base: B23
subst: x=x, y=floor(x), z=frac(x)
mode: verbatim

id: T24
statement: exp(floor(x)) + exp(frac(x)) >= 2 + x on x>0
base: B24
subst: y=floor(x), z=frac(x)
mode: verbatim

id: T25
statement: abs(sin(floor(x))) + abs(sin(frac(x))) + abs(cos(x)) >= 1 on x in R
base: B25
subst: a=floor(x), b=frac(x)
subst_printed: a=x, b=frac(x)
mode: verbatim
note: suspected transcription issue in the proof clause; it binds a=x, b=frac(x), which does not reproduce the statement. stored binding a=floor(x), b=frac(x) satisfies a+b=x as the base requires; the printed binding is kept for the record.

id: T26
statement: (3*floor(x)^2+3*floor(x)*frac(x)+frac(x)^2)*(floor(x)^2+floor(x)*frac(x)+frac(x)^2)*(3*frac(x)^2+3*frac(x)*floor(x)+floor(x)^2) >= (x^2+floor(x)*frac(x))^3 on x>0
base: B26
subst: a=x, b=floor(x), c=frac(x)
mode: verbatim
note: third factor encoded exactly as printed (3*frac^2+3*frac*floor+floor^2); it equals the expansion of c^2+c*a+a^2 under the substitution.

id: T27
statement: floor(x)/((3*floor(x)+2*frac(x))*(floor(x)+2*frac(x))) + frac(x)/((3*frac(x)+2*floor(x))*(frac(x)+2*floor(x))) >= 11/(48*x) on x>0
base: B27
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: constant 11/48 comes from the base's 9/8 after subtracting the identically-2/3 first term and dividing by 2x.

id: T28
statement: floor(x)^2/(x+floor(x)) + frac(x)^2/(x+frac(x)) >= x*(2*x^2+3*floor(x)*frac(x))/((x+floor(x))*(x+frac(x))) on x>0
base: B28
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: the substituted base yields the printed right side divided by 4; as printed the denominator factor 4 is missing and the statement fails everywhere tested, e.g. x=1.5.

id: T29
statement: sqrt(1+2*frac(x)/floor(x)) + sqrt(1+2*floor(x)/frac(x)) >= 1 + 2*(sqrt(floor(x)/(x+frac(x))) + sqrt(frac(x)/(x+floor(x)))) on x>1, x notin Z
base: B29
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: domain amended with x notin Z. the base gives constant sqrt(2) and coefficient sqrt(2) where the printed claim has 1 and 2, so the printed form is strictly stronger than the derivation supports.

id: T30
statement: frac(x)/floor(x) + floor(x)/frac(x) >= 1 + 2*(floor(x)/(x+frac(x)) + frac(x)/(x+floor(x))) on x>1, x notin Z
base: B30
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: domain amended with x notin Z. the substituted base yields additive constant 1/2, not 1; as printed the statement fails near x -> 2 from below.

id: T31
statement: min((sqrt(2)+1)*sqrt(x) + sqrt(frac(x)) - sqrt(5*(floor(x)+2*frac(x))), (sqrt(2)+1)*sqrt(x) + sqrt(x+floor(x)) - sqrt(5*(floor(x)+2*frac(x))), (sqrt(2)+1)*sqrt(x) + sqrt(x+frac(x)) - sqrt(5*(frac(x)+2*floor(x)))) >= 0 on x>0
base: B31
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the two printed claims are encoded as a min of margins; the source's trailing etc. (other permutations of the substitution) is not expanded. stored substitution is the permutation giving claim 1's first arm exactly.

id: T32
statement: min(abs(sin(floor(x))) + abs(sin(frac(x))) - abs(sin(x)), abs(cos(floor(x))) + abs(cos(frac(x))) - abs(cos(x))) >= 0 on x in R
base: B32
subst: a=floor(x), b=frac(x)
subst_printed: a=x, b=floor(x)
mode: verbatim
note: suspected transcription issue in the proof clause (binds a=x, b=floor(x)); stored binding a=floor(x), b=frac(x) satisfies a+b=x. the cosine claim inherits the base's false cosine component and fails, e.g. on 2<x<3 near the right end.

id: T33
statement: 6 + frac(x)/floor(x) + floor(x)/frac(x) >= (cbrt(x/floor(x)) + cbrt(floor(x)/frac(x)) + cbrt(frac(x)/x))^3 on x>1, x notin Z
base: B33
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: domain amended with x notin Z. the substituted base yields 18 + 6*frac(x)/floor(x) + 6*floor(x)/frac(x) on the left; the printed 6 + u + v is too weak and fails, e.g. at x=1.5.

id: T34
statement: floor(x)/(x+frac(x))^2 + frac(x)/(x+floor(x))^2 >= 1/(8*x) on x>0
base: B34
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: constant 1/(8x) comes from the base's 9/(8x) after removing the identically-1/x first term.

id: T35
statement: x*floor(x)/((x+frac(x))*(2*x+floor(x))) + frac(x)*(x+frac(x))/((x+floor(x))*(2*x+frac(x))) >= (floor(x)+5*frac(x))/(12*x) on x>0
base: B35
subst: a=x, b=floor(x), c=frac(x)
mode: simplified

id: T36
statement: floor(x)/(2*x+frac(x)) + frac(x)/(2*x+floor(x)) <= (3*floor(x)^2+4*floor(x)*frac(x)+3*frac(x)^2)/(6*x) on x>0
base: B36
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the substituted base yields denominator 6x^2, not 6x; as printed the bound fails on 0<x<1, e.g. x=0.5.

id: T37
statement: (floor(x)^5-floor(x)^2+3)*(frac(x)^5-frac(x)^2+3) >= 8*x^3/(x^5-x^2+3) on x>0
base: B37
subst: a=x, b=floor(x), c=frac(x)
mode: simplified

id: T38
statement: (2*x+floor(x))^2/(2*floor(x)^2+(x+frac(x))^2) + (2*x+frac(x))^2/(2*frac(x)^2+(x+floor(x))^2) <= 5 on x>0
base: B38
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the base instance's first term is identically 3; the theorem subtracts it from the constant 8.

id: T39
statement: min(9*x^2*(x+floor(x)) - (x + sqrt(x*floor(x)) + cbrt(x*floor(x)*frac(x)))^3, 9*x^2*floor(x) - (floor(x) + sqrt(floor(x)*frac(x)) + cbrt(x*floor(x)*frac(x)))^3, 9*x^2*(x+frac(x)) - (frac(x) + sqrt(x*frac(x)) + cbrt(x*floor(x)*frac(x)))^3) >= 0 on x>0
base: B39
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: three printed claims encoded as a min of margins; stored substitution is the permutation behind claim 1, the others follow from permuting (a,b,c). claim 2's margin is identically zero on branch 0.

id: T40
statement: 7*(x+floor(x))^4 + 7*(x+frac(x))^4 >= 3*x^4 + 4*(floor(x)^4+frac(x)^4) on x>0
base: B40
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the substituted base yields 4*(floor^4+frac^4) - 3x^4 on the right; the printed +3x^4 form is stronger but still holds.

id: T41
statement: frac(x)^2/((x+frac(x))^2+floor(x)^2) + floor(x)^2/((x+floor(x))^2+frac(x)^2) >= 3/20 on x>0
base: B41
subst: a=x, b=floor(x), c=frac(x)
mode: simplified
note: the base instance's first term vanishes identically and the remaining terms carry a factor 4, giving 3/20 from 3/5.

id: T42
statement: sqrt(2*x/(x+floor(x))) + sqrt(2*floor(x)/x) + sqrt(2*frac(x)/(x+frac(x))) <= 3 on x>0
base: B42
subst: a=x, b=floor(x), c=frac(x)
mode: verbatim

id: T43
statement: 1/(x+floor(x))^2 + 1/((x+frac(x))^2+frac(x)^2) >= (5*x^2-4*floor(x)*frac(x))/(4*x^2*(x^2+floor(x)*frac(x))) on x>0
corrected: 1/(x+floor(x))^2 + 1/(x+frac(x))^2 >= (5*x^2-4*floor(x)*frac(x))/(4*x^2*(x^2+floor(x)*frac(x))) on x>0
base: B43
subst: x=x, y=floor(x), z=frac(x)
mode: simplified
note: suspected transcription slip; printed second denominator carries a stray +frac(x)^2 term, kept in the printed form and dropped in corrected. printed fails on 0<x<1; the corrected margin is identically zero there (degenerate equality family of the base).
)CORPUS";

} // namespace

const Corpus& builtin_corpus() {
    static const Corpus corpus = parse_corpus(kBuiltinCorpusText);
    return corpus;
}

} // namespace floorcheck
