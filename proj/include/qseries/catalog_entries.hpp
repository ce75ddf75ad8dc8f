#ifndef QSERIES_CATALOG_ENTRIES_HPP_
#define QSERIES_CATALOG_ENTRIES_HPP_

#include <vector>

#include "qseries/common.hpp"

namespace qseries {

struct BuiltinEntry {
  const char* name;
  const char* anchor;
  const char* text;
  Exp order;
};

// The built-in identity suite.  Entry names are stable identifiers; anchors
// quote the statement they verify.
inline const std::vector<BuiltinEntry>& builtin_entries() {
  static const std::vector<BuiltinEntry> entries = {

      // ----- theta function properties and product rearrangements -----

      {"sec5_thetaElliptic", "j(q^n x;q)=(-1)^n q^{-binom(n,2)} x^{-n} j(x;q)",
       R"(identity sec5_thetaElliptic params n in -5..5 a in 0..1 e in 1..2 b in 1..2
          lhs = j((-1)^a*q^(e+n*b);q^b)
          rhs = ((-1)^(n+a*n)) * q^(-b*binom(n,2)-n*e) * j((-1)^a*q^e;q^b))",
       60},
      {"sec5_thetaFlip", "j(x;q)=j(q/x;q)",
       R"(identity sec5_thetaFlip params a in 0..1 e in -4..6 b in 1..3
          lhs = j((-1)^a*q^e;q^b)
          rhs = j((-1)^a*q^(b-e);q^b))",
       60},
      {"sec5_thetaSplitM2", "j(z;q)=j(-qz^2;q^4)-zj(-q^3z^2;q^4)",
       R"(identity sec5_thetaSplitM2 params a in 0..1 e in -3..4 b in 1..2
          lhs = j((-1)^a*q^e;q^b)
          rhs = j(-q^(b+2*e);q^(4*b)) - (-1)^a*q^e*j(-q^(3*b+2*e);q^(4*b)))",
       60},
      {"sec5_thetaSplitM3", "j(z;q)=sum_k (-1)^k q^binom(k,2) z^k j((-1)^{m+1}q^{binom(m,2)+mk}z^m;q^{m^2})",
       R"(identity sec5_thetaSplitM3 params a in 0..1 e in -3..4 b in 1..2
          lhs = j((-1)^a*q^e;q^b)
          rhs = sum(k,0,2, (-1)^k * (-1)^(a*k) * q^(b*binom(k,2)+k*e) *
                           j((-1)^a*q^(b*(3+3*k)+3*e);q^(9*b))))",
       60},
      {"sec5_theta110_n2", "j(x;q)=J_1 j(x,qx,...,q^{n-1}x;q^n)/J_n^n",
       R"(identity sec5_theta110_n2 params a in 0..1 e in -3..4 b in 1..2
          lhs = j((-1)^a*q^e;q^b) * poch(q^(2*b),inf;q^(2*b))^2
          rhs = poch(q^b,inf;q^b) * j((-1)^a*q^e;q^(2*b)) * j((-1)^a*q^(e+b);q^(2*b)))",
       60},
      {"sec5_theta110_n3", "j(x;q)=J_1 j(x,qx,...,q^{n-1}x;q^n)/J_n^n",
       R"(identity sec5_theta110_n3 params a in 0..1 e in -3..4 b in 1..2
          lhs = j((-1)^a*q^e;q^b) * poch(q^(3*b),inf;q^(3*b))^3
          rhs = poch(q^b,inf;q^b) * j((-1)^a*q^e;q^(3*b)) * j((-1)^a*q^(e+b);q^(3*b))
                * j((-1)^a*q^(e+2*b);q^(3*b)))",
       60},
      {"sec5_theta111", "j(x;-q)=j(x;q^2)j(-qx;q^2)/J_{1,4}",
       R"(identity sec5_theta111 params a in 0..1 e in -3..4 b in 1..2
          lhs = j((-1)^a*q^e;-q^b) * j(q^b;q^(4*b))
          rhs = j((-1)^a*q^e;q^(2*b)) * j((-1)^(a+1)*q^(e+b);q^(2*b)))",
       60},
      {"sec5_theta112_n2", "j(x^n;q^n)=J_n j(x,zeta x,...;q)/J_1^n",
       R"(identity sec5_theta112_n2 params a in 0..1 e in -3..4 b in 1..2
          lhs = j(q^(2*e);q^(2*b)) * poch(q^b,inf;q^b)^2
          rhs = poch(q^(2*b),inf;q^(2*b)) * j((-1)^a*q^e;q^b) * j((-1)^(a+1)*q^e;q^b))",
       60},
      {"sec5_quintuple", "j(qx^3;q^3)+xj(q^2x^3;q^3)=J_1 j(x^2;q)/j(x;q)",
       R"(identity sec5_quintuple params a in 0..1 e in -3..4 b in 1..2
          lhs = ( j((-1)^a*q^(b+3*e);q^(3*b)) + (-1)^a*q^e*j((-1)^a*q^(2*b+3*e);q^(3*b)) )
                * j((-1)^a*q^e;q^b)
          rhs = poch(q^b,inf;q^b) * j(q^(2*e);q^b))",
       60},
      {"sec5_quintupleProduct", "j(qx^3;q^3)+xj(q^2x^3;q^3)=j(-x;q)j(qx^2;q^2)/J_2",
       R"(identity sec5_quintupleProduct params a in 0..1 e in -3..4 b in 1..2
          lhs = ( j((-1)^a*q^(b+3*e);q^(3*b)) + (-1)^a*q^e*j((-1)^a*q^(2*b+3*e);q^(3*b)) )
                * poch(q^(2*b),inf;q^(2*b))
          rhs = j((-1)^(a+1)*q^e;q^b) * j(q^(b+2*e);q^(2*b)))",
       60},
      {"sec5_quintupleInv", "quintuple product with inverted unit theta",
       R"(identity sec5_quintupleInv params e in -3..4 b in 1..2
          lhs = j(-q^(b+3*e);q^(3*b)) - q^e*j(-q^(2*b+3*e);q^(3*b))
          rhs = poch(q^b,inf;q^b) * j(q^(2*e);q^b) * jinv(-q^e;q^b))",
       60},
      {"sec5_rearrJbar01a", "Jbar_{0,1}=2Jbar_{1,4}",
       R"(identity sec5_rearrJbar01a lhs = Jbar[0,1] rhs = 2*Jbar[1,4])", 60},
      {"sec5_rearrJbar01b", "Jbar_{0,1}=2J_2^2/J_1",
       R"(identity sec5_rearrJbar01b lhs = Jbar[0,1] rhs = 2*Jsingle[2]^2*Jsingleinv[1])",
       60},
      {"sec5_rearrJbar12", "Jbar_{1,2}=J_2^5/(J_1^2J_4^2)",
       R"(identity sec5_rearrJbar12 lhs = Jbar[1,2]
          rhs = Jsingle[2]^5*Jsingleinv[1]^2*Jsingleinv[4]^2)",
       60},
      {"sec5_rearrJ12", "J_{1,2}=J_1^2/J_2",
       R"(identity sec5_rearrJ12 lhs = J[1,2] rhs = Jsingle[1]^2*Jsingleinv[2])", 60},
      {"sec5_rearrJbar13", "Jbar_{1,3}=J_2J_3^2/(J_1J_6)",
       R"(identity sec5_rearrJbar13 lhs = Jbar[1,3]
          rhs = Jsingle[2]*Jsingle[3]^2*Jsingleinv[1]*Jsingleinv[6])",
       60},
      {"sec5_rearrJ14", "J_{1,4}=J_1J_4/J_2",
       R"(identity sec5_rearrJ14 lhs = J[1,4] rhs = Jsingle[1]*Jsingle[4]*Jsingleinv[2])",
       60},
      {"sec5_rearrJ16", "J_{1,6}=J_1J_6^2/(J_2J_3)",
       R"(identity sec5_rearrJ16 lhs = J[1,6]
          rhs = Jsingle[1]*Jsingle[6]^2*Jsingleinv[2]*Jsingleinv[3])",
       60},
      {"sec5_rearrJbar16", "Jbar_{1,6}=J_2^2J_3J_12/(J_1J_4J_6)",
       R"(identity sec5_rearrJbar16 lhs = Jbar[1,6]
          rhs = Jsingle[2]^2*Jsingle[3]*Jsingle[12]*Jsingleinv[1]*Jsingleinv[4]*Jsingleinv[6])",
       60},

      // ----- Hecke double-sum functional equations -----

      {"hm_H7eq114", "f_{a,b,c}(x,y;q)=-q^{a+b+c}/(xy) f_{a,b,c}(q^{2a+b}/x,q^{2c+b}/y;q)",
       R"(identity hm_H7eq114 params a in 1..2 c in 1..2 e1 in -1..2 e2 in -1..2
          lhs = f[a,a,c](-q^(e1), q^(e2); q)
          rhs = q^(2*a+c-e1-e2) * f[a,a,c](-q^(3*a-e1), q^(2*c+a-e2); q))",
       60},
      {"hm_Gen1_l1k0", "general functional equation, (l,k)=(1,0)",
       R"(identity hm_Gen1_l1k0 params a in 1..2 b in 1..2 c in 1..2 e1 in 1..2 e2 in 1..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(1*e1+0*e2+a*binom(1,2)+b*1*0+c*binom(0,2))
                * f[a,b,c](-q^(a*1+b*0+e1),-q^(b*1+c*0+e2);q)
              + sum(u,0,0, q^(u*e1+a*binom(u,2))*j(-q^(u*b+e2);q^c))
              + sum(u,0,-1, q^(u*e2+c*binom(u,2))*j(-q^(u*b+e1);q^a)))",
       60},
      {"hm_Gen1_l0k1", "general functional equation, (l,k)=(0,1)",
       R"(identity hm_Gen1_l0k1 params a in 1..2 b in 1..2 c in 1..2 e1 in 1..2 e2 in 1..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(e2+c*binom(1,2)) * f[a,b,c](-q^(b+e1),-q^(c+e2);q)
              + sum(u,0,-1, q^(u*e1+a*binom(u,2))*j(-q^(u*b+e2);q^c))
              + sum(u,0,0, q^(u*e2+c*binom(u,2))*j(-q^(u*b+e1);q^a)))",
       60},
      {"hm_Gen1_lm1k5", "general functional equation, (l,k)=(-1,5)",
       R"(identity hm_Gen1_lm1k5 params a in 1..2 b in 1..2 c in 1..2 e1 in 1..2 e2 in 1..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(-e1+5*e2+a*binom(-1,2)-5*b+c*binom(5,2))
                * f[a,b,c](-q^(-a+5*b+e1),-q^(-b+5*c+e2);q)
              + sum(u,0,-2, q^(u*e1+a*binom(u,2))*j(-q^(u*b+e2);q^c))
              + sum(u,0,4, q^(u*e2+c*binom(u,2))*j(-q^(u*b+e1);q^a)))",
       60},
      {"hm_Gen1_lm2k1", "general functional equation, (l,k)=(-2,1)",
       R"(identity hm_Gen1_lm2k1 params a in 1..2 b in 1..2 c in 1..2 e1 in 1..2 e2 in 1..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(-2*e1+e2+a*binom(-2,2)-2*b+c*binom(1,2))
                * f[a,b,c](-q^(-2*a+b+e1),-q^(-2*b+c+e2);q)
              + sum(u,0,-3, q^(u*e1+a*binom(u,2))*j(-q^(u*b+e2);q^c))
              + sum(u,0,0, q^(u*e2+c*binom(u,2))*j(-q^(u*b+e1);q^a)))",
       60},
      {"hm_fnq1", "f_{a,b,c}(x,y;q)=-y f_{a,b,c}(q^b x, q^c y;q)+j(x;q^a)",
       R"(identity hm_fnq1 params a in 1..2 b in 1..2 c in 1..2 e1 in 0..2 e2 in 0..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(e2)*f[a,b,c](-q^(b+e1),-q^(c+e2);q) + j(-q^(e1);q^a))",
       60},
      {"hm_fnq2", "f_{a,b,c}(x,y;q)=-x f_{a,b,c}(q^a x, q^b y;q)+j(y;q^c)",
       R"(identity hm_fnq2 params a in 1..2 b in 1..2 c in 1..2 e1 in 0..2 e2 in 0..2
          lhs = f[a,b,c](-q^(e1),-q^(e2);q)
          rhs = q^(e1)*f[a,b,c](-q^(a+e1),-q^(b+e2);q) + j(-q^(e2);q^c))",
       60},

      // ----- Appell function laws -----

      {"hm_mxqz_fnq_z", "m(x,z;q)=m(x,qz;q)",
       R"(identity hm_mxqz_fnq_z params e1 in 0..3 e2 in 1..2
          lhs = m(-q^(e1), q^(e2+3); q^3)
          rhs = m(-q^(e1), q^(e2); q^3))",
       60},
      {"hm_mxqz_flip", "m(x,z;q)=x^{-1}m(x^{-1},z^{-1};q)",
       R"(identity hm_mxqz_flip params e1 in 0..3 e2 in 1..2
          lhs = m(-q^(e1), q^(e2); q^3)
          rhs = (-q^(e1))^(-1) * m(-q^(-e1), q^(-e2); q^3))",
       60},
      {"hm_mxqz_fnq_x", "m(qx,z;q)=1-xm(x,z;q)",
       R"(identity hm_mxqz_fnq_x params e1 in 0..3 e2 in 1..2
          lhs = m(-q^(e1+3), q^(e2); q^3)
          rhs = 1 + q^(e1)*m(-q^(e1), q^(e2); q^3))",
       60},
      {"hm_changingZ_1", "m(x,z1;q)-m(x,z0;q) theta quotient",
       R"(identity hm_changingZ_1
          lhs = m(q,-q;q^3) - m(q,-1;q^3)
          rhs = -(poch(q^3,inf;q^3)^3 * j(q;q^3) * j(q^2;q^3) * jinv(-1;q^3)
                  * jinv(-q;q^3) * jinv(-q;q^3) * jinv(-q^2;q^3)))",
       60},
      {"hm_changingZ_2", "m(x,z1;q)-m(x,z0;q) theta quotient",
       R"(identity hm_changingZ_2
          lhs = m(q^4,-q;q^3) - m(q^4,-1;q^3)
          rhs = -(poch(q^3,inf;q^3)^3 * j(q;q^3) * j(q^5;q^3) * jinv(-1;q^3)
                  * jinv(-q;q^3) * jinv(-q^4;q^3) * jinv(-q^5;q^3)))",
       60},
      {"hm_changingZ_3", "m(x,z1;q)-m(x,z0;q) theta quotient",
       R"(identity hm_changingZ_3
          lhs = m(-q,q^2;q^3) - m(-q,q;q^3)
          rhs = q * poch(q^3,inf;q^3)^3 * j(q;q^3) * j(-q^4;q^3) * jinv(q;q^3)
                * jinv(q^2;q^3) * jinv(-q^2;q^3) * jinv(-q^3;q^3))",
       60},
      {"hm_msplit_n2_a", "specialization n=2 of the Appell splitting",
       R"(identity hm_msplit_n2_a
          lhs = m(-q,q;q^3)
          rhs = m(-q^5,-1;q^12) + q^(-2)*m(-q^(-1),-1;q^12)
              - poch(q^6,inf;q^6)^3 * jinv(-q^2;q^3) * Jbarinv[0,12]
                * ( j(q^6;q^6)*j(-q^2;q^12)*jinv(q^5;q^6)*jinv(q;q^6)
                  + q^2*j(q^9;q^6)*j(-q^8;q^12)*jinv(q^5;q^6)*jinv(q^4;q^6) ))",
       60},
      {"hm_msplit_n2_b", "specialization n=2 of the Appell splitting",
       R"(identity hm_msplit_n2_b
          lhs = m(-q^2,q;q^3)
          rhs = m(-q^7,-1;q^12) + q^(-1)*m(-q,-1;q^12)
              - poch(q^6,inf;q^6)^3 * jinv(-q^3;q^3) * Jbarinv[0,12]
                * ( j(q^8;q^6)*j(-q^2;q^12)*jinv(q^7;q^6)*jinv(q;q^6)
                  + q^3*j(q^11;q^6)*j(-q^8;q^12)*jinv(q^7;q^6)*jinv(q^4;q^6) ))",
       60},

      // ----- degenerate Hecke coefficients -----

      {"deg_OneHalfEvenSpin", "-q^8 f_{5,5,1}(q^15,q^4;q)+q^3 f_{5,5,1}(q^15,q^2;q)=0",
       R"(identity deg_OneHalfEvenSpin
          lhs = -(q^8*f[5,5,1](q^15,q^4;q)) + q^3*f[5,5,1](q^15,q^2;q)
          rhs = 0)",
       100},
      {"deg_OneThirdFirstPairEvenSpin",
       "-q^15 f_{7,7,1}(q^28,q^5;q)+q^8 f_{7,7,1}(q^28,q^3;q)=0",
       R"(identity deg_OneThirdFirstPairEvenSpin
          lhs = -(q^15*f[7,7,1](q^28,q^5;q)) + q^8*f[7,7,1](q^28,q^3;q)
          rhs = 0)",
       100},
      {"deg_OneThirdSecondPairEvenSpin",
       "-q^18 f_{7,7,1}(q^28,q^6;q)+q^4 f_{7,7,1}(q^28,q^2;q)=0",
       R"(identity deg_OneThirdSecondPairEvenSpin
          lhs = -(q^18*f[7,7,1](q^28,q^6;q)) + q^4*f[7,7,1](q^28,q^2;q)
          rhs = 0)",
       100},

      // ----- general Appell sums -----

      {"hm_generalAppellSumOneModFour", "m(-q^{1+4s},-1;q^4) recursion",
       R"(identity hm_generalAppellSumOneModFour params s in 0..6
          lhs = m(-q^(1+4*s),-1;q^4) - q^(2*s-1)*m(-q^(-1+4*s),-1;q^4)
          rhs = sum(k,0,2*s-1,(-1)^k*q^(2*s*k-binom(k+1,2)))
              + 2*q^(s+4*binom(s,2))*m(-q,-1;q^4))",
       60},
      {"hm_generalAppellSumOneModSix", "m(-q^{1+6s},-1;q^6) recursion",
       R"(identity hm_generalAppellSumOneModSix params s in 0..6
          lhs = m(-q^(1+6*s),-1;q^6) - q^(2*s-1)*m(-q^(-1+6*s),-1;q^6)
          rhs = sum(k,0,s-1, q^(6*s*k-6*binom(k+1,2))*(q^k - q^(-k+2*s-1)))
              + 2*q^(s+6*binom(s,2))*m(-q,-1;q^6))",
       60},
      {"hm_generalAppellSumTwoModSix", "m(-q^{2+6s},-1;q^6) recursion",
       R"(identity hm_generalAppellSumTwoModSix params s in 0..6
          lhs = m(-q^(2+6*s),-1;q^6) - q^(4*s-2)*m(-q^(-2+6*s),-1;q^6)
          rhs = sum(k,0,s-1, q^(6*s*k-6*binom(k+1,2))*(q^(2*k) - q^(-2*k+4*s-2)))
              + 2*q^(2*s+6*binom(s,2))*m(-q^2,-1;q^6))",
       60},

      // ----- mock theta dual definitions -----

      {"mock_mu2", "mu_2(q)=4m(-q,-1;q^4)-J_{2,4}^4/J_1^3",
       R"(identity mock_mu2
          lhs = mu2(q)
          rhs = 4*m(-q,-1;q^4) - J[2,4]^4*Jsingleinv[1]^3)",
       80},
      {"mock_mu2Alt", "mu_2(q)=2m(-q,-1;q^4)+2m(-q,q;q^4)",
       R"(identity mock_mu2Alt
          lhs = mu2(q)
          rhs = 2*m(-q,-1;q^4) + 2*m(-q,q;q^4))",
       80},
      {"mock_f3", "f_3(q)=4m(-q,q;q^3)+J_{3,6}^2/J_1",
       R"(identity mock_f3
          lhs = f3(q)
          rhs = 4*m(-q,q;q^3) + J[3,6]^2*Jsingleinv[1])",
       80},
      {"mock_omega3", "omega_3(q)=-2q^{-1}m(q,q^2;q^6)+J_6^3/(J_2J_{3,6})",
       R"(identity mock_omega3
          lhs = omega3(q)
          rhs = -(2*q^(-1)*m(q,q^2;q^6)) + Jsingle[6]^3*Jsingleinv[2]*Jinv[3,6])",
       80},
      {"mock_psi3", "psi_3(q)=-m(q,-q;-q^3)+qJ_{12}^3/(J_4J_{3,12})",
       R"(identity mock_psi3
          lhs = psi3(q)
          rhs = -(m(q,-q;-q^3)) + q*Jsingle[12]^3*Jsingleinv[4]*Jinv[3,12])",
       80},
      {"mock_chi3", "chi_3(q)=m(-q,q;q^3)+J_{3,6}^2/J_1",
       R"(identity mock_chi3
          lhs = chi3(q)
          rhs = m(-q,q;q^3) + J[3,6]^2*Jsingleinv[1])",
       80},

      // ----- alternate Appell forms -----

      {"hm_altAppell_omega", "m(-q,-1;q^6) through omega_3(-q)",
       R"(identity hm_altAppell_omega
          lhs = m(-q,-1;q^6)
          rhs = 1/2*q*omega3(-q) - 1/2*q*Jsingle[6]^3*Jsingleinv[2]*Jbarinv[3,6]
              + Jsingle[6]^3*Jbar[2,6]*J[3,6]*Jbarinv[0,6]*Jinv[1,6]*Jinv[2,6]*Jbarinv[3,6])",
       60},
      {"hm_altAppell_f3", "m(-q^2,-1;q^6) through f_3(q^2)",
       R"(identity hm_altAppell_f3
          lhs = m(-q^2,-1;q^6)
          rhs = 1/4*f3(q^2) - 1/4*J[6,12]^2*Jsingleinv[2]
              + Jsingle[6]^3*Jbarinv[0,6]*Jinv[2,6])",
       60},
      {"hm_altAppellChi", "m(-q^5,-1;q^12)-q^{-1}m(-q,-1;q^12) through chi_3",
       R"(identity hm_altAppellChi
          lhs = m(-q^5,-1;q^12) - q^(-1)*m(-q,-1;q^12)
          rhs = chi3(q) - J[3,6]^2*Jsingleinv[1]
              - 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3)",
       60},
      {"hm_altAppellPsi", "m(-q^5,-1;q^12)-q^{-1}m(-q,-1;q^12) through psi_3",
       R"(identity hm_altAppellPsi
          lhs = m(-q^5,-1;q^12) - q^(-1)*m(-q,-1;q^12)
          rhs = -(psi3(-q)) - q*Jsingle[12]^3*Jbarinv[3,12]*Jsingleinv[4]
              - 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3)",
       60},
      {"hm_altAppellChiPsiEqualRhs", "both identities are the same",
       R"(identity hm_altAppellChiPsiEqualRhs
          lhs = chi3(q) - J[3,6]^2*Jsingleinv[1]
          rhs = -(psi3(-q)) - q*Jsingle[12]^3*Jbarinv[3,12]*Jsingleinv[4])",
       60},

      // ----- universal mock theta conjectures -----

      {"g3_mockConj_f0", "f_0(q)=J_{5,10}J_{2,5}/J_1-2q^2g_3(q^2;q^{10})",
       R"(identity g3_mockConj_f0
          lhs = sum(n,0,12, q^(n^2)*pochinv(-q,n;q))
          rhs = J[5,10]*J[2,5]*Jsingleinv[1] - 2*q^2*g3(q^2;q^10))",
       60},
      {"g3_mockConj_f1", "f_1(q)=J_{5,10}J_{1,5}/J_1-2q^3g_3(q^4;q^{10})",
       R"(identity g3_mockConj_f1
          lhs = sum(n,0,12, q^(n*(n+1))*pochinv(-q,n;q))
          rhs = J[5,10]*J[1,5]*Jsingleinv[1] - 2*q^3*g3(q^4;q^10))",
       60},

      // ----- Schilling-Warnaar generalized Euler identity -----

      {"sw_genEuler_13_even", "sum_L (-1)^L q^binom(L,2) C_{2L+eta,ell} = delta",
       R"(identity sw_genEuler_13_even params a in 0..0 b in 0..1
          lhs = genEuler[1,3](2*a,2*b)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_13_odd", "classical Euler identity for (p,p')=(1,3)",
       R"(identity sw_genEuler_13_odd params a in 0..0 b in 0..0
          lhs = genEuler[1,3](2*a+1,2*b+1)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_25_even", "generalized Euler identity at (2,5)",
       R"(identity sw_genEuler_25_even params a in 0..1 b in 0..2
          lhs = genEuler[2,5](2*a,2*b)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_25_odd", "generalized Euler identity at (2,5)",
       R"(identity sw_genEuler_25_odd params a in 0..1 b in 0..1
          lhs = genEuler[2,5](2*a+1,2*b+1)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_37_even", "generalized Euler identity at (3,7)",
       R"(identity sw_genEuler_37_even params a in 0..2 b in 0..3
          lhs = genEuler[3,7](2*a,2*b)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_37_odd", "generalized Euler identity at (3,7)",
       R"(identity sw_genEuler_37_odd params a in 0..2 b in 0..2
          lhs = genEuler[3,7](2*a+1,2*b+1)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_38_even", "generalized Euler identity at (3,8)",
       R"(identity sw_genEuler_38_even params a in 0..3 b in 0..3
          lhs = genEuler[3,8](2*a,2*b)
          rhs = delta(a,b))",
       60},
      {"sw_genEuler_38_odd", "generalized Euler identity at (3,8)",
       R"(identity sw_genEuler_38_odd params a in 0..2 b in 0..3
          lhs = genEuler[3,8](2*a+1,2*b+1)
          rhs = delta(a,b))",
       60},

      // ----- integral-level generalized Euler identity -----

      {"sw_intLevelGenEuler_N1", "delta_{2r,2s} = j(q^{1+2s};q^3) C_{2s,2r}",
       R"(identity sw_intLevelGenEuler_N1 params r in 0..0 s in 0..1
          lhs = delta(r,s)
          rhs = sum(a,0,0, (-1)^a*q^(binom(a,2))
                  * j(q^(a+1+2*(a+s));q^3) * C[1,3](2*(a+s),2*r)))",
       60},
      {"sw_intLevelGenEuler_N2", "integral-level generalized Euler identity, N=2",
       R"(identity sw_intLevelGenEuler_N2 params r in 0..1 s in 0..1
          lhs = delta(r,s)
          rhs = sum(a,0,1, (-1)^a*q^(binom(a,2))
                  * j(-q^(2*a+3+2*(a+s));q^8) * C[1,4](2*(a+s),2*r)))",
       60},
      {"sw_intLevelGenEuler_N3", "integral-level generalized Euler identity, N=3",
       R"(identity sw_intLevelGenEuler_N3 params r in 0..1 s in 0..2
          lhs = delta(r,s)
          rhs = sum(a,0,2, (-1)^a*q^(binom(a,2))
                  * j(q^(3*a+6+2*(a+s));q^15) * C[1,5](2*(a+s),2*r)))",
       60},

      // ----- section 2: even-spin generalized Euler identities -----

      {"evenspin_genEulerIdentity_p2j1", "modified generalized Euler identity, even spin",
       R"(identity evenspin_genEulerIdentity_p2j1 params p in 2..2 j in 1..1 r in 0..1 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+2*p*(a+s)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s),2*r))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+1))*j(-q^(-u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"evenspin_genEulerIdentity_p3j1", "modified generalized Euler identity, even spin",
       R"(identity evenspin_genEulerIdentity_p3j1 params p in 3..3 j in 1..1 r in 0..2 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+2*p*(a+s)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s),2*r))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+1))*j(-q^(-u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"evenspin_genEulerIdentity_p3j2", "modified generalized Euler identity, even spin",
       R"(identity evenspin_genEulerIdentity_p3j2 params p in 3..3 j in 2..2 r in 0..3 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+2*p*(a+s)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s),2*r))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+1))*j(-q^(-u*(2*p+j)+p*(2*r+1)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(a*(2*p+j)+2*p*s+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"evenspin_genEulerIdentityCorollary_p2", "corollary for j=1, even spin",
       R"(identity evenspin_genEulerIdentityCorollary_p2 params p in 2..2 r in 0..1 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(p+2*p*s);q^(2*p+1)) * C[p,2*p+1](2*s,2*r)
              + (-1)^p * q^(binom(p,2)-p*(r-s))
                * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                  * ( j(-q^(u*(2*p+1)+p*(2*r+1)); q^(2*p*(2*p+1)))
                    - q^(u*(2*p+1)-u*(2*r+1))*j(-q^(-u*(2*p+1)+p*(2*r+1)); q^(2*p*(2*p+1))) )
                  * ( -(q^(p+u*s) * f[2*p+1,2*p+1,1](q^(2*p*s+3*p+1),q^(u+p+1);q))
                    + q^(p-u*(s+1)) * f[2*p+1,2*p+1,1](q^(2*p*s+3*p+1),q^(-u+p+1);q) )))",
       60},
      {"evenspin_genEulerIdentityCorollary_p3", "corollary for j=1, even spin",
       R"(identity evenspin_genEulerIdentityCorollary_p3 params p in 3..3 r in 0..2 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(p+2*p*s);q^(2*p+1)) * C[p,2*p+1](2*s,2*r)
              + (-1)^p * q^(binom(p,2)-p*(r-s))
                * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                  * ( j(-q^(u*(2*p+1)+p*(2*r+1)); q^(2*p*(2*p+1)))
                    - q^(u*(2*p+1)-u*(2*r+1))*j(-q^(-u*(2*p+1)+p*(2*r+1)); q^(2*p*(2*p+1))) )
                  * ( -(q^(p+u*s) * f[2*p+1,2*p+1,1](q^(2*p*s+3*p+1),q^(u+p+1);q))
                    + q^(p-u*(s+1)) * f[2*p+1,2*p+1,1](q^(2*p*s+3*p+1),q^(-u+p+1);q) )))",
       60},
      {"evenspin_levelOneHalf", "level 1/2, even spin",
       R"(identity evenspin_levelOneHalf params r in 0..1 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(2+4*s);q^5) * C[2,5](2*s,2*r)
              - q^(-r)*j(q^(1+2*r);q^5)
                * ( -(q^(2+3*s)*f[5,5,1](q^(4*s+7),q^4;q))
                  + q^(1+s)*f[5,5,1](q^(4*s+7),q^2;q) ))",
       60},
      {"evenspin_genEulerOneHalf", "1/2-level Hecke coefficients through mu_2",
       R"(identity evenspin_genEulerOneHalf params s in 0..6
          lhs = -(q^(2+3*s)*f[5,5,1](q^(4*s+7),q^4;q)) + q^(1+s)*f[5,5,1](q^(4*s+7),q^2;q)
          rhs = (-1)^s*j(q^(s+3);q^5)
                * ( q^(binom(s+1,2))*1/2*mu2(q)
                  + q^(-3*binom(s,2))*sum(k,0,2*s-1,(-1)^k*q^(2*s*k-binom(k+1,2))) )
              - (-1)^s*(-q)^(binom(s+1,2))*1/2
                *Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j((-q)^(s+3);-q^5))",
       60},
      {"evenspin_genEulerOneHalfCor", "mock theta conjecture-like identity for 1/2-level",
       R"(identity evenspin_genEulerOneHalfCor
          lhs = -(q^2*f[5,5,1](q^7,q^4;q)) + q*f[5,5,1](q^7,q^2;q)
          rhs = 1/2*j(q^2;q^5)*mu2(q)
              - 1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q^3;-q^5))",
       80},
      {"evenspin_levelOneThird", "level 1/3, even spin",
       R"(identity evenspin_levelOneThird params r in 0..2 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(3+6*s);q^7) * C[3,7](2*s,2*r)
              + q^(1-2*r)*j(q^(8+2*r);q^14)*j(q^(2+4*r);q^28)*Jsingleinv[28]
                * ( -(q^(3+4*s)*f[7,7,1](q^(6*s+10),q^5;q))
                  + q^(2+2*s)*f[7,7,1](q^(6*s+10),q^3;q) )
              - q^(-r)*j(q^(1+2*r);q^14)*j(q^(16+4*r);q^28)*Jsingleinv[28]
                * ( -(q^(3+5*s)*f[7,7,1](q^(6*s+10),q^6;q))
                  + q^(1+s)*f[7,7,1](q^(6*s+10),q^2;q) ))",
       60},
      {"evenspin_genEulerOneThirdFirstPair", "1/3-level first pair through omega_3",
       R"(identity evenspin_genEulerOneThirdFirstPair params s in 0..6
          lhs = -(q^(3+4*s)*f[7,7,1](q^(6*s+10),q^5;q)) + q^(2+2*s)*f[7,7,1](q^(6*s+10),q^3;q)
          rhs = (-1)^s*j(q^(s+4);q^7)
                * ( q^(binom(s+1,2))*q*omega3(-q)
                  + q^(-5*binom(s,2))*sum(k,0,s-1,q^(6*k*s-6*binom(k+1,2))*(q^k - q^(-k+2*s-1))) )
              - q^(5*s^2-3*s+1)*Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*j(q^(8+16*s);q^28))",
       60},
      {"evenspin_genEulerOneThirdSecondPair", "1/3-level second pair through f_3",
       R"(identity evenspin_genEulerOneThirdSecondPair params s in 0..6
          lhs = -(q^(3+5*s)*f[7,7,1](q^(6*s+10),q^6;q)) + q^(1+s)*f[7,7,1](q^(6*s+10),q^2;q)
          rhs = (-1)^s*j(q^(s+4);q^7)
                * ( q^(binom(s+1,2))*1/2*f3(q^2)
                  + q^(-5*binom(s,2)-s)*sum(k,0,s-1,q^(6*k*s-6*binom(k+1,2))*(q^(2*k) - q^(-2*k+4*s-2))) )
              - (-1)^s*(-q)^(binom(s+1,2))*1/2*Jsingle[1]^2*Jsingleinv[4]*j((-q)^(s+4);-q^7))",
       60},
      {"evenspin_genEulerOneThirdCorA", "mock theta conjecture-like identity, omega_3",
       R"(identity evenspin_genEulerOneThirdCorA
          lhs = -(q^3*f[7,7,1](q^10,q^5;q)) + q^2*f[7,7,1](q^10,q^3;q)
          rhs = j(q^3;q^7)*q*omega3(-q)
              - q*Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*J[8,28])",
       60},
      {"evenspin_genEulerOneThirdCorB", "mock theta conjecture-like identity, f_3",
       R"(identity evenspin_genEulerOneThirdCorB
          lhs = -(q^3*f[7,7,1](q^10,q^6;q)) + q*f[7,7,1](q^10,q^2;q)
          rhs = j(q^3;q^7)*1/2*f3(q^2)
              - 1/2*Jsingle[1]^2*Jsingleinv[4]*j(-q^3;-q^7))",
       60},
      {"evenspin_oneThirdCommonBaseA", "common-base rewrite of the omega_3 identity",
       R"(identity evenspin_oneThirdCommonBaseA
          lhs = -(q^3*f[7,7,1](q^10,q^5;q)) + q^2*f[7,7,1](q^10,q^3;q)
          rhs = j(q^3;q^7)*q*omega3(-q)
              - q*J[1,28]^3*J[3,28]^3*J[4,28]*J[5,28]^3*J[7,28]^3*J[8,28]^2
                 *J[9,28]^3*J[11,28]^3*J[12,28]*J[13,28]^3*Jsingleinv[28]^23)",
       60},
      {"evenspin_oneThirdCommonBaseB", "common-base rewrite of the f_3 identity",
       R"(identity evenspin_oneThirdCommonBaseB
          lhs = -(q^3*f[7,7,1](q^10,q^6;q)) + q*f[7,7,1](q^10,q^2;q)
          rhs = 1/2*j(q^3;q^7)*f3(q^2)
              - 1/2*J[1,28]^2*J[2,28]^2*J[3,28]*J[4,28]^2*J[5,28]^2*J[6,28]^3
                 *J[7,28]*J[8,28]*J[9,28]^2*J[10,28]^3*J[11,28]*J[12,28]*J[13,28]^2
                 *Jsingle[14]^4*Jsingleinv[28]^25)",
       60},
      {"evenspin_levelTwoThirds", "level 2/3, even spin",
       R"(identity evenspin_levelTwoThirds params r in 0..3 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(-q^(7+6*s);q^16) * C[3,8](2*s,2*r)
              - poch(q,inf;q)^3 * j(-q^(15+6*s);q^16) * C[3,8](2*(1+s),2*r)
              + q^(1-2*r)*j(q^(9+2*r);q^16)*j(q^(2+4*r);q^32)*Jsingleinv[32]
                * ( q^(7+4*s)*f[4,4,1](-q^(6*s+23),-q^13;q^4)
                  - q^(5+2*s)*f[4,4,1](-q^(6*s+23),-q^9;q^4)
                  - q^(13+4*s)*f[4,4,1](-q^(31+6*s),-q^15;q^4)
                  + q^(9+2*s)*f[4,4,1](-q^(31+6*s),-q^11;q^4) )
              - q^(-r)*j(q^(1+2*r);q^16)*j(q^(18+4*r);q^32)*Jsingleinv[32]
                * ( q^(7+5*s)*f[4,4,1](-q^(6*s+23),-q^15;q^4)
                  - q^(3+s)*f[4,4,1](-q^(6*s+23),-q^7;q^4)
                  - q^(14+5*s)*f[4,4,1](-q^(31+6*s),-q^17;q^4)
                  + q^(6+s)*f[4,4,1](-q^(31+6*s),-q^9;q^4) ))",
       60},
      {"evenspin_level23FirstQuad_sEven", "2/3-level first quad, s even",
       R"(identity evenspin_level23FirstQuad_sEven params s in 0..3
          lhs = q^(7+8*s)*f[4,4,1](-q^(23+12*s),-q^13;q^4)
              - q^(5+4*s)*f[4,4,1](-q^(23+12*s),-q^9;q^4)
              - q^(13+8*s)*f[4,4,1](-q^(31+12*s),-q^15;q^4)
              + q^(9+4*s)*f[4,4,1](-q^(31+12*s),-q^11;q^4)
          rhs = q^(7+16*s)*j(-q^(23+12*s);q^16)
                * ( q^(2*s+12*binom(s,2))*q^2*omega3(-q^2)
                  + sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*s-2))) )
              - q^(17+16*s)*j(-q^(31+12*s);q^16)
                * ( 1 - q^(4*s)*( q^(4*s+12*binom(s,2))*1/2*f3(q^4)
                                + sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*s-4))) ) )
              - (-1)^s*q^(binom(2*s,2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                *j(-q^(1+4*s);q^16))",
       60},
      {"evenspin_level23FirstQuad_sOdd", "2/3-level first quad, s odd",
       R"(identity evenspin_level23FirstQuad_sOdd params s in 0..3
          lhs = q^(11+8*s)*f[4,4,1](-q^(29+12*s),-q^13;q^4)
              - q^(7+4*s)*f[4,4,1](-q^(29+12*s),-q^9;q^4)
              - q^(17+8*s)*f[4,4,1](-q^(37+12*s),-q^15;q^4)
              + q^(11+4*s)*f[4,4,1](-q^(37+12*s),-q^11;q^4)
          rhs = q^(15+16*s)*j(-q^(29+12*s);q^16)
                * ( 1 - q^(4*s)*( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*s-4)))
                                + q^(4*s+12*binom(s,2))*1/2*f3(q^4) ) )
              - q^(25+16*s)*j(-q^(37+12*s);q^16)
                * ( 1 - q^(4*s+2)*( 1 - q^(8*s)
                      *( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*s-2)))
                       + q^(2*s+12*binom(s,2))*q^2*omega3(-q^2) ) ) )
              - (-1)^s*q^(binom(2*s+1,2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                *j(-q^(3+4*s);q^16))",
       60},
      {"evenspin_level23SecondQuad_sEven", "2/3-level second quad, s even",
       R"(identity evenspin_level23SecondQuad_sEven params s in 0..3
          lhs = q^(7+10*s)*f[4,4,1](-q^(12*s+23),-q^15;q^4)
              - q^(3+2*s)*f[4,4,1](-q^(12*s+23),-q^7;q^4)
              - q^(14+10*s)*f[4,4,1](-q^(31+12*s),-q^17;q^4)
              + q^(6+2*s)*f[4,4,1](-q^(31+12*s),-q^9;q^4)
          rhs = q^(7+14*s)*j(-q^(12*s+23);q^16)
                * ( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*s-4)))
                  + q^(4*s+12*binom(s,2))*1/2*f3(q^4) )
              - q^(16+14*s)*j(-q^(31+12*s);q^16)
                * ( 1 - q^(8*s)*( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*s-2)))
                                + q^(2*s+12*binom(s,2))*q^2*omega3(-q^2) ) )
              - (-1)^s*q^(binom(2*s+1,2))*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                *j(-q^(9+4*s);q^16))",
       60},
      {"evenspin_level23SecondQuad_sOdd", "2/3-level second quad, s odd",
       R"(identity evenspin_level23SecondQuad_sOdd params s in 0..3
          lhs = q^(12+10*s)*f[4,4,1](-q^(12*s+29),-q^15;q^4)
              - q^(4+2*s)*f[4,4,1](-q^(12*s+29),-q^7;q^4)
              - q^(19+10*s)*f[4,4,1](-q^(37+12*s),-q^17;q^4)
              + q^(7+2*s)*f[4,4,1](-q^(37+12*s),-q^9;q^4)
          rhs = q^(14+14*s)*j(-q^(12*s+29);q^16)
                * ( 1 - q^(8*s)*( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*s-2)))
                                + q^(2*s+12*binom(s,2))*q^2*omega3(-q^2) ) )
              - q^(23+14*s)*j(-q^(37+12*s);q^16)
                * ( 1 - q^(8*s+4)*( 1 - q^(4*s)
                      *( sum(k,0,s-1,q^(12*s*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*s-4)))
                       + q^(4*s+12*binom(s,2))*1/2*f3(q^4) ) ) )
              - (-1)^s*q^(binom(2*s+2,2))*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                *j(-q^(11+4*s);q^16))",
       60},
      {"evenspin_genEulerTwoThirdsCorA", "2/3-level mock theta conjecture-like identity",
       R"(identity evenspin_genEulerTwoThirdsCorA
          lhs = q^7*f[4,4,1](-q^23,-q^13;q^4) - q^5*f[4,4,1](-q^23,-q^9;q^4)
              - q^13*f[4,4,1](-q^31,-q^15;q^4) + q^9*f[4,4,1](-q^31,-q^11;q^4)
          rhs = j(-q^7;q^16)*q^2*omega3(-q^2)
              - q^2*j(-q;q^16)*( 1 - 1/2*( f3(q^4) - Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2 ) ))",
       60},
      {"evenspin_genEulerTwoThirdsCorB", "2/3-level mock theta conjecture-like identity",
       R"(identity evenspin_genEulerTwoThirdsCorB
          lhs = q^7*f[4,4,1](-q^23,-q^15;q^4) - q^3*f[4,4,1](-q^23,-q^7;q^4)
              - q^14*f[4,4,1](-q^31,-q^17;q^4) + q^6*f[4,4,1](-q^31,-q^9;q^4)
          rhs = -(q*j(-q;q^16)*( 1 - q^2*omega3(-q^2) ))
              + 1/2*j(-q^7;q^16)*( f3(q^4) - Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2 ))",
       60},
      {"evenspin_twoThirdsCommonBaseA", "common-base rewrite, first 2/3 identity",
       R"(identity evenspin_twoThirdsCommonBaseA
          lhs = q^7*f[4,4,1](-q^23,-q^13;q^4) - q^5*f[4,4,1](-q^23,-q^9;q^4)
              - q^13*f[4,4,1](-q^31,-q^15;q^4) + q^9*f[4,4,1](-q^31,-q^11;q^4)
          rhs = q^2*j(-q^7;q^16)*omega3(-q^2) - q^2*j(-q^15;q^16)*(1 - 1/2*f3(q^4))
              - 1/2*q^2*J[1,32]*J[2,32]^4*J[3,32]^2*J[4,32]*J[5,32]^2*J[6,32]^3*J[7,32]^2
                 *J[8,32]*J[9,32]^2*J[10,32]^3*J[11,32]^2*J[12,32]*J[13,32]^2*J[14,32]^3
                 *J[15,32]*Jsingle[16]^2*Jsingleinv[32]^30)",
       60},
      {"evenspin_twoThirdsCommonBaseB", "common-base rewrite, second 2/3 identity",
       R"(identity evenspin_twoThirdsCommonBaseB
          lhs = q^7*f[4,4,1](-q^23,-q^15;q^4) - q^3*f[4,4,1](-q^23,-q^7;q^4)
              - q^14*f[4,4,1](-q^31,-q^17;q^4) + q^6*f[4,4,1](-q^31,-q^9;q^4)
          rhs = 1/2*j(-q^7;q^16)*f3(q^4) - q*j(-q^15;q^16)*(1 - q^2*omega3(-q^2))
              - 1/2*J[1,32]^2*J[2,32]^3*J[3,32]^2*J[4,32]*J[5,32]^2*J[6,32]^3*J[7,32]
                 *J[8,32]*J[9,32]*J[10,32]^3*J[11,32]^2*J[12,32]*J[13,32]^2*J[14,32]^4
                 *J[15,32]^2*Jsingle[16]^2*Jsingleinv[32]^30)",
       60},

      // ----- section 3: odd-spin analogues -----

      {"oddspin_genEulerIdentity_p2j1", "modified generalized Euler identity, odd spin",
       R"(identity oddspin_genEulerIdentity_p2j1 params p in 2..2 j in 1..1 r in 0..1 s in 0..1
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+p*(2*(a+s)+1)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s)+1,2*r+1))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+2))*j(-q^(-u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s+1))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"oddspin_genEulerIdentity_p3j1", "modified generalized Euler identity, odd spin",
       R"(identity oddspin_genEulerIdentity_p3j1 params p in 3..3 j in 1..1 r in 0..2 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+p*(2*(a+s)+1)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s)+1,2*r+1))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+2))*j(-q^(-u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s+1))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"oddspin_genEulerIdentity_p3j2", "modified generalized Euler identity, odd spin",
       R"(identity oddspin_genEulerIdentity_p3j2 params p in 3..3 j in 2..2 r in 0..2 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * sum(a,0,j-1, (-1)^a * q^(binom(a,2))
                  * j((-1)^(j+1)*q^(j*(a+p)+binom(j,2)+p*(2*(a+s)+1)); q^(j*(2*p+j)))
                  * C[p,2*p+j](2*(a+s)+1,2*r+1))
              + (-1)^p * q^(binom(p,2)-p*(r-s)) * sum(a,0,j-1, (-1)^a * q^(p*a)
                  * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                    * ( j(-q^(u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j)))
                      - q^(u*(2*p+j)-u*(2*r+2))*j(-q^(-u*(2*p+j)+p*(2*r+2)); q^(2*p*(2*p+j))) )
                    * ( (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)+u*(a+s+1))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a+u+p+1)); q^j)
                      - (-1)^j * q^(binom(a,2)+binom(j,2)+j*(a+p)-u*(a+s+j))
                        * f[2*p+j,2*p+j,j]((-1)^(j+1)*q^(p*(2*(a+s)+1)+a*j+3*p*j+j+3*binom(j,2)),
                                           (-1)^(j+1)*q^(3*binom(j,2)+j*(a-u+p+1)); q^j) ) )))",
       60},
      {"oddspin_genEulerIdentityCorollary_p2", "corollary for j=1, odd spin",
       R"(identity oddspin_genEulerIdentityCorollary_p2 params p in 2..2 r in 0..1 s in 0..1
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(p+p*(2*s+1));q^(2*p+1)) * C[p,2*p+1](2*s+1,2*r+1)
              + (-1)^p * q^(binom(p,2)-p*(r-s))
                * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                  * ( j(-q^(u*(2*p+1)+p*(2*r+2)); q^(2*p*(2*p+1)))
                    - q^(u*(2*p+1)-u*(2*r+2))*j(-q^(-u*(2*p+1)+p*(2*r+2)); q^(2*p*(2*p+1))) )
                  * ( -(q^(p+u*(s+1)) * f[2*p+1,2*p+1,1](q^(p*(2*s+1)+3*p+1),q^(u+p+1);q))
                    + q^(p-u*(s+1)) * f[2*p+1,2*p+1,1](q^(p*(2*s+1)+3*p+1),q^(-u+p+1);q) )))",
       60},
      {"oddspin_genEulerIdentityCorollary_p3", "corollary for j=1, odd spin",
       R"(identity oddspin_genEulerIdentityCorollary_p3 params p in 3..3 r in 0..2 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(p+p*(2*s+1));q^(2*p+1)) * C[p,2*p+1](2*s+1,2*r+1)
              + (-1)^p * q^(binom(p,2)-p*(r-s))
                * sum(u,1,p-1, (-1)^u * q^(binom(u+1,2)+u*(r-p))
                  * ( j(-q^(u*(2*p+1)+p*(2*r+2)); q^(2*p*(2*p+1)))
                    - q^(u*(2*p+1)-u*(2*r+2))*j(-q^(-u*(2*p+1)+p*(2*r+2)); q^(2*p*(2*p+1))) )
                  * ( -(q^(p+u*(s+1)) * f[2*p+1,2*p+1,1](q^(p*(2*s+1)+3*p+1),q^(u+p+1);q))
                    + q^(p-u*(s+1)) * f[2*p+1,2*p+1,1](q^(p*(2*s+1)+3*p+1),q^(-u+p+1);q) )))",
       60},
      {"oddspin_levelOneHalf", "level 1/2, odd spin",
       R"(identity oddspin_levelOneHalf params r in 0..1 s in 0..1
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(4+4*s);q^5) * C[2,5](2*s+1,2*r+1)
              - q^(-r)*j(q^(2+2*r);q^5)
                * ( -(q^(3+3*s)*f[5,5,1](q^(4*s+9),q^4;q))
                  + q^(1+s)*f[5,5,1](q^(4*s+9),q^2;q) ))",
       60},
      {"oddspin_genEulerOneHalf", "1/2-level odd-spin mock theta identity",
       R"(identity oddspin_genEulerOneHalf
          lhs = -(q^3*f[5,5,1](q^9,q^4;q)) + q*f[5,5,1](q^9,q^2;q)
          rhs = j(q;q^5)*(1 - 1/2*mu2(q))
              - 1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q;-q^5))",
       60},
      {"oddspin_levelOneThird", "level 1/3, odd spin",
       R"(identity oddspin_levelOneThird params r in 0..2 s in 0..2
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(q^(6*s+6);q^7) * C[3,7](2*s+1,2*r+1)
              + q^(1-2*r)*j(q^(9+2*r);q^14)*j(q^(4+4*r);q^28)*Jsingleinv[28]
                * ( -(q^(4+4*s)*f[7,7,1](q^(6*s+13),q^5;q))
                  + q^(2+2*s)*f[7,7,1](q^(6*s+13),q^3;q) )
              - q^(-r)*j(q^(2+2*r);q^14)*j(q^(18+4*r);q^28)*Jsingleinv[28]
                * ( -(q^(5+5*s)*f[7,7,1](q^(6*s+13),q^6;q))
                  + q^(1+s)*f[7,7,1](q^(6*s+13),q^2;q) ))",
       60},
      {"oddspin_genEulerOneThirdA", "1/3-level odd-spin identity through f_3",
       R"(identity oddspin_genEulerOneThirdA
          lhs = -(q^4*f[7,7,1](q^13,q^5;q)) + q^2*f[7,7,1](q^13,q^3;q)
          rhs = j(q;q^7)*(1 - 1/2*f3(q^2))
              - 1/2*Jsingle[1]^2*Jsingleinv[4]*j(-q;-q^7))",
       60},
      {"oddspin_genEulerOneThirdB", "1/3-level odd-spin identity through omega_3",
       R"(identity oddspin_genEulerOneThirdB
          lhs = -(q^5*f[7,7,1](q^13,q^6;q)) + q*f[7,7,1](q^13,q^2;q)
          rhs = j(q;q^7)*(1 - q*omega3(-q))
              - Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*J[12,28])",
       60},
      {"oddspin_oneThirdRemarkA", "remark-equivalent form through f_3",
       R"(identity oddspin_oneThirdRemarkA
          lhs = q^4*f[7,7,1](q^13,q^5;q) + f[7,7,1](q^6,q^2;q)
          rhs = j(q;q^7)*1/2*f3(q^2)
              + 1/2*Jsingle[1]^2*Jsingleinv[4]*j(-q;-q^7))",
       60},
      {"oddspin_oneThirdRemarkB", "remark-equivalent form through omega_3",
       R"(identity oddspin_oneThirdRemarkB
          lhs = q^5*f[7,7,1](q^13,q^6;q) + f[7,7,1](q^6,q;q)
          rhs = j(q;q^7)*q*omega3(-q)
              + Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*J[12,28])",
       60},
      {"oddspin_levelTwoThirds", "level 2/3, odd spin",
       R"(identity oddspin_levelTwoThirds params r in 0..2 s in 0..3
          lhs = poch(q,inf;q)^3 * delta(r,s)
          rhs = poch(q,inf;q)^3 * j(-q^(10+6*s);q^16) * C[3,8](2*s+1,2*r+1)
              - poch(q,inf;q)^3 * j(-q^(18+6*s);q^16) * C[3,8](2*s+3,2*r+1)
              + q^(1-2*r)*j(q^(10+2*r);q^16)*j(q^(4+4*r);q^32)*Jsingleinv[32]
                * ( q^(8+4*s)*f[4,4,1](-q^(6*s+26),-q^13;q^4)
                  - q^(5+2*s)*f[4,4,1](-q^(6*s+26),-q^9;q^4)
                  - q^(14+4*s)*f[4,4,1](-q^(6*s+34),-q^15;q^4)
                  + q^(9+2*s)*f[4,4,1](-q^(6*s+34),-q^11;q^4) )
              - q^(-r)*j(q^(2+2*r);q^16)*j(q^(20+4*r);q^32)*Jsingleinv[32]
                * ( q^(9+5*s)*f[4,4,1](-q^(6*s+26),-q^15;q^4)
                  - q^(3+s)*f[4,4,1](-q^(6*s+26),-q^7;q^4)
                  - q^(16+5*s)*f[4,4,1](-q^(6*s+34),-q^17;q^4)
                  + q^(6+s)*f[4,4,1](-q^(6*s+34),-q^9;q^4) ))",
       60},
      {"oddspin_genEulerTwoThirdsA", "2/3-level odd-spin identity through psi_3 and chi_3",
       R"(identity oddspin_genEulerTwoThirdsA
          lhs = q^8*f[4,4,1](-q^26,-q^13;q^4) - q^5*f[4,4,1](-q^26,-q^9;q^4)
              - q^14*f[4,4,1](-q^34,-q^15;q^4) + q^9*f[4,4,1](-q^34,-q^11;q^4)
          rhs = -(j(-q^10;q^16)*psi3(-q))
              - j(-q^2;q^16)*( 1 - q*(1 - chi3(q)) )
              + 3*q^2*Jsingle[3]*Jsingle[12]^3*Jsingleinv[4]*Jsingleinv[6]^2*j(-q^2;q^16))",
       60},
      {"oddspin_genEulerTwoThirdsB", "2/3-level odd-spin identity through chi_3 and psi_3",
       R"(identity oddspin_genEulerTwoThirdsB
          lhs = q^9*f[4,4,1](-q^26,-q^15;q^4) - q^3*f[4,4,1](-q^26,-q^7;q^4)
              - q^16*f[4,4,1](-q^34,-q^17;q^4) + q^6*f[4,4,1](-q^34,-q^9;q^4)
          rhs = j(-q^10;q^16)*(1 - chi3(q))
              - q*j(-q^2;q^16)*( q^(-2) + psi3(-q) )
              + 3*q*Jsingle[3]*Jsingle[12]^3*Jsingleinv[4]*Jsingleinv[6]^2*j(-q^10;q^16))",
       60},

      // ----- quoted background results -----

      {"bg_fracLevel12alt_l0", "1/2-level string functions through mu_2, spin 0",
       R"(identity bg_fracLevel12alt_l0 params k in -2..2
          lhs = poch(q,inf;q)^3 * C[2,5](2*k,0)
          rhs = q^k*j(q;q^5)*( q^(binom(2*k,2))*1/2*mu2(q)
                            + sum(u,0,2*k-1,(-1)^u*q^(2*k*u-binom(u+1,2))) )
              + q^(k+binom(2*k,2))*1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q;-q^5))",
       60},
      {"bg_fracLevel12alt_l1", "1/2-level string functions through mu_2, spin 1",
       R"(identity bg_fracLevel12alt_l1 params k in -2..1
          lhs = poch(q,inf;q)^3 * C[2,5](2*k+1,1)
          rhs = q^k*j(q^2;q^5)*( -(q^(binom(2*k+1,2))*1/2*mu2(q))
                              + sum(u,0,2*k,(-1)^u*q^((2*k+1)*u-binom(u+1,2))) )
              + q^(k+binom(2*k+1,2))*1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q^3;-q^5))",
       60},
      {"bg_fracLevel12alt_l2", "1/2-level string functions through mu_2, spin 2",
       R"(identity bg_fracLevel12alt_l2 params k in -2..2
          lhs = poch(q,inf;q)^3 * C[2,5](2*k,2)
          rhs = q^(k-1)*j(q^3;q^5)*( q^(binom(2*k,2))*1/2*mu2(q)
                                  + sum(u,0,2*k-1,(-1)^u*q^(2*k*u-binom(u+1,2))) )
              - q^(k-1+binom(2*k,2))*1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q^3;-q^5))",
       60},
      {"bg_fracLevel12alt_l3", "1/2-level string functions through mu_2, spin 3",
       R"(identity bg_fracLevel12alt_l3 params k in -1..2
          lhs = poch(q,inf;q)^3 * C[2,5](2*k+1,3)
          rhs = q^(k-1)*j(q^4;q^5)*( -(q^(binom(2*k+1,2))*1/2*mu2(q))
                                  + sum(u,0,2*k,(-1)^u*q^((2*k+1)*u-binom(u+1,2))) )
              - q^(k-1+binom(2*k+1,2))*1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q;-q^5))",
       60},
      {"bg_pP37m0ell2r", "1/3-level string functions through omega_3 and f_3",
       R"(identity bg_pP37m0ell2r params r in 0..2
          lhs = poch(q,inf;q)^3 * C[3,7](0,2*r)
          rhs = (-q)^(-r)*poch(q,inf;q)^3*Jsingleinv[2]
                *j(-q^(1+2*r);q^14)*j(q^(16+4*r);q^28)*Jbarinv[0,1]*Jsingleinv[28]
              - q^(2-2*r)*j(q^(6-2*r);q^14)*j(q^(26-4*r);q^28)*Jsingleinv[28]*omega3(-q)
              + q^(-r)*1/2*j(q^(1+2*r);q^14)*j(q^(16+4*r);q^28)*Jsingleinv[28]*f3(q^2))",
       60},
      {"bg_pP38m0ell2r", "2/3-level string functions, quantum number 0",
       R"(identity bg_pP38m0ell2r params r in 0..3
          lhs = poch(q,inf;q)^3 * C[3,8](0,2*r)
          rhs = (-1)^floor((r+1)/2)*q^(-r)*1/2
                *Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2*Jsingleinv[8]
                *j(-q^(7-2*r);q^16)*j(q^(1+2*r);q^8)
              - q^(3-2*r)*j(q^(7-2*r);q^16)*j(q^(30-4*r);q^32)*Jsingleinv[32]*omega3(-q^2)
              + q^(-r)*j(q^(1+2*r);q^16)*j(q^(18+4*r);q^32)*Jsingleinv[32]*1/2*f3(q^4))",
       60},
      {"bg_pP38m2ell2r", "2/3-level string functions, quantum number 2",
       R"(identity bg_pP38m2ell2r params r in 0..3
          lhs = poch(q,inf;q)^3 * C[3,8](2,2*r)
          rhs = (-1)^floor((r+1)/2)*q^(3-2*r)*1/2
                *Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2*Jsingleinv[32]
                *j(q^(2+4*r);q^32)*j(q^(7-2*r);q^16)
              - q^(3-2*r)*j(q^(7-2*r);q^16)*j(q^(30-4*r);q^32)*Jsingleinv[32]*(1 - 1/2*f3(q^4))
              + q^(1-r)*j(q^(1+2*r);q^16)*j(q^(18+4*r);q^32)*Jsingleinv[32]*(1 - q^2*omega3(-q^2)))",
       60},
      {"bg_mockThetaConj2502r", "1/2-level mock theta conjecture-like identity",
       R"(identity bg_mockThetaConj2502r params r in 0..1
          lhs = poch(q,inf;q)^3 * C[2,5](0,2*r)
          rhs = (-q)^(-r)*1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q^(2*r+1);-q^5)
              + q^(-r)*1/2*j(q^(1+2*r);q^5)*mu2(q))",
       60},

      // ----- section 6: theta identities -----

      {"section6_level12EvenSpinThetaId", "theta identity behind the 1/2-level even-spin result",
       R"(identity section6_level12EvenSpinThetaId params s in 0..4 skip 2
          lhs = (-1)^s*q^(binom(s+1,2))*j(q^(s+3);q^5)*1/2*J[2,4]^4*Jsingleinv[1]^3
              - Jbarinv[0,4]*Jbarinv[0,20]
                * ( -(q^(2+3*s)*thetaPart[5](q^(4*s+7),q^4;q))
                  + q^(1+s)*thetaPart[5](q^(4*s+7),q^2;q) )
          rhs = -((-1)^s*(-q)^(binom(s+1,2))*1/2
                 *Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j((-q)^(s+3);-q^5)))",
       60},
      {"section6_level13EvenSpinFirstPairThetaId", "theta identity, 1/3-level first pair",
       R"(identity section6_level13EvenSpinFirstPairThetaId params s in 0..6 skip 3
          lhs = (-1)^s*2*q^(binom(s+1,2))*j(q^(s+4);q^7)
                * ( -(1/2*q*Jsingle[6]^3*Jsingleinv[2]*Jbarinv[3,6])
                  + Jsingle[6]^3*Jbar[2,6]*J[3,6]*Jbarinv[0,6]*Jinv[1,6]*Jinv[2,6]*Jbarinv[3,6] )
              - Jbarinv[0,6]*Jbarinv[0,42]
                * ( -(q^(3+4*s)*thetaPart[7](q^(6*s+10),q^5;q))
                  + q^(2+2*s)*thetaPart[7](q^(6*s+10),q^3;q) )
          rhs = -(q^(5*s^2-3*s+1)*Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*j(q^(8+16*s);q^28)))",
       60},
      {"section6_level13EvenSpinSecondPairThetaId", "theta identity, 1/3-level second pair",
       R"(identity section6_level13EvenSpinSecondPairThetaId params s in 0..6 skip 3
          lhs = (-1)^s*2*q^(binom(s+1,2))*j(q^(s+4);q^7)
                * ( -(1/4*J[6,12]^2*Jsingleinv[2]) + Jsingle[6]^3*Jbarinv[0,6]*Jinv[2,6] )
              - Jbarinv[0,6]*Jbarinv[0,42]
                * ( -(q^(3+5*s)*thetaPart[7](q^(6*s+10),q^6;q))
                  + q^(1+s)*thetaPart[7](q^(6*s+10),q^2;q) )
          rhs = -((-1)^s*(-q)^(binom(s+1,2))*1/2*Jsingle[1]^2*Jsingleinv[4]*j((-q)^(s+4);-q^7)))",
       60},
      {"section6_level23EvenSpinFirstQuad_sEvenThetaId", "theta identity, 2/3-level, s even",
       R"(identity section6_level23EvenSpinFirstQuad_sEvenThetaId params s in 0..3
          lhs = 2*q^(7+16*s)*q^(2*s+12*binom(s,2))*j(-q^(12*s+23);q^16)
                * ( -(1/2*q^2*Jsingle[12]^3*Jsingleinv[4]*Jbarinv[6,12])
                  + Jsingle[12]^3*Jbar[4,12]*J[6,12]*Jbarinv[0,12]*Jinv[2,12]*Jinv[4,12]*Jbarinv[6,12] )
              + 2*q^(17+16*s)*q^(4*s)*q^(4*s+12*binom(s,2))*j(-q^(31+12*s);q^16)
                * ( -(1/4*J[12,24]^2*Jsingleinv[4]) + Jsingle[12]^3*Jbarinv[0,12]*Jinv[4,12] )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^(7+8*s)*thetaPart[4](-q^(12*s+23),-q^13;q^4)
                  - q^(5+4*s)*thetaPart[4](-q^(12*s+23),-q^9;q^4)
                  - q^(13+8*s)*thetaPart[4](-q^(31+12*s),-q^15;q^4)
                  + q^(9+4*s)*thetaPart[4](-q^(31+12*s),-q^11;q^4) )
          rhs = -((-1)^s*q^(binom(2*s,2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                 *j(-q^(1+4*s);q^16)))",
       60},
      {"section6_level23EvenSpinFirstQuad_sOddThetaId", "theta identity, 2/3-level, s odd",
       R"(identity section6_level23EvenSpinFirstQuad_sOddThetaId params s in 0..3
          lhs = -(2*q^(4*s)*q^(4*s+12*binom(s,2))*q^(15+16*s)*j(-q^(29+12*s);q^16)
                * ( -(1/4*J[12,24]^2*Jsingleinv[4]) + Jsingle[12]^3*Jbarinv[0,12]*Jinv[4,12] ))
              - 2*q^(25+16*s)*q^(4*s+2)*q^(8*s)*q^(2*s+12*binom(s,2))*j(-q^(37+12*s);q^16)
                * ( -(1/2*q^2*Jsingle[12]^3*Jsingleinv[4]*Jbarinv[6,12])
                  + Jsingle[12]^3*Jbar[4,12]*J[6,12]*Jbarinv[0,12]*Jinv[2,12]*Jinv[4,12]*Jbarinv[6,12] )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^(11+8*s)*thetaPart[4](-q^(29+12*s),-q^13;q^4)
                  - q^(7+4*s)*thetaPart[4](-q^(29+12*s),-q^9;q^4)
                  - q^(17+8*s)*thetaPart[4](-q^(37+12*s),-q^15;q^4)
                  + q^(11+4*s)*thetaPart[4](-q^(37+12*s),-q^11;q^4) )
          rhs = -((-1)^s*q^(binom(2*s+1,2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                 *j(-q^(3+4*s);q^16)))",
       60},
      {"section6_level23EvenSpinSecondQuad_sEvenThetaId", "theta identity, 2/3-level, s even",
       R"(identity section6_level23EvenSpinSecondQuad_sEvenThetaId params s in 0..3
          lhs = 2*q^(7+14*s)*q^(4*s+12*binom(s,2))*j(-q^(12*s+23);q^16)
                * ( -(1/4*J[12,24]^2*Jsingleinv[4]) + Jsingle[12]^3*Jbarinv[0,12]*Jinv[4,12] )
              + 2*q^(8*s)*q^(16+14*s)*q^(2*s+12*binom(s,2))*j(-q^(31+12*s);q^16)
                * ( -(1/2*q^2*Jsingle[12]^3*Jsingleinv[4]*Jbarinv[6,12])
                  + Jsingle[12]^3*Jbar[4,12]*J[6,12]*Jbarinv[0,12]*Jinv[2,12]*Jinv[4,12]*Jbarinv[6,12] )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^(7+10*s)*thetaPart[4](-q^(12*s+23),-q^15;q^4)
                  - q^(3+2*s)*thetaPart[4](-q^(12*s+23),-q^7;q^4)
                  - q^(14+10*s)*thetaPart[4](-q^(31+12*s),-q^17;q^4)
                  + q^(6+2*s)*thetaPart[4](-q^(31+12*s),-q^9;q^4) )
          rhs = -((-1)^s*q^(binom(2*s+1,2))*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                 *j(-q^(9+4*s);q^16)))",
       60},
      {"section6_level23EvenSpinSecondQuad_sOddThetaId", "theta identity, 2/3-level, s odd",
       R"(identity section6_level23EvenSpinSecondQuad_sOddThetaId params s in 0..3
          lhs = -(2*q^(8*s)*q^(2*s+12*binom(s,2))*q^(14+14*s)*j(-q^(12*s+29);q^16)
                * ( -(1/2*q^2*Jsingle[12]^3*Jsingleinv[4]*Jbarinv[6,12])
                  + Jsingle[12]^3*Jbar[4,12]*J[6,12]*Jbarinv[0,12]*Jinv[2,12]*Jinv[4,12]*Jbarinv[6,12] ))
              - 2*q^(23+14*s)*q^(8*s+4)*q^(4*s)*q^(4*s+12*binom(s,2))*j(-q^(37+12*s);q^16)
                * ( -(1/4*J[12,24]^2*Jsingleinv[4]) + Jsingle[12]^3*Jbarinv[0,12]*Jinv[4,12] )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^(12+10*s)*thetaPart[4](-q^(12*s+29),-q^15;q^4)
                  - q^(4+2*s)*thetaPart[4](-q^(12*s+29),-q^7;q^4)
                  - q^(19+10*s)*thetaPart[4](-q^(37+12*s),-q^17;q^4)
                  + q^(7+2*s)*thetaPart[4](-q^(37+12*s),-q^9;q^4) )
          rhs = -((-1)^s*q^(binom(2*s+2,2))*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                 *j(-q^(11+4*s);q^16)))",
       60},
      {"section6_level12OddSpinThetaId", "theta identity behind the 1/2-level odd-spin result",
       R"(identity section6_level12OddSpinThetaId
          lhs = -(1/2*j(q;q^5)*J[2,4]^4*Jsingleinv[1]^3)
              - Jbarinv[0,4]*Jbarinv[0,20]
                * ( -(q^3*thetaPart[5](q^9,q^4;q)) + q*thetaPart[5](q^9,q^2;q) )
          rhs = -(1/2*Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j(-q;-q^5)))",
       60},
      {"section6_level13OddSpinFirstPairThetaId", "theta identity, 1/3-level odd spin",
       R"(identity section6_level13OddSpinFirstPairThetaId
          lhs = 1/2*J[6,12]^2*J[1,7]*Jsingleinv[2]
              - 2*Jsingle[6]^3*J[1,7]*Jbarinv[0,6]*Jinv[2,6]
              - Jbarinv[0,6]*Jbarinv[0,42]
                * ( -(q^4*thetaPart[7](q^13,q^5;q)) + q^2*thetaPart[7](q^13,q^3;q) )
          rhs = -(1/2*Jsingle[1]^2*Jsingleinv[4]*j(-q;-q^7)))",
       60},
      {"section6_level13OddSpinSecondPairThetaId", "theta identity, 1/3-level odd spin",
       R"(identity section6_level13OddSpinSecondPairThetaId
          lhs = q*Jsingle[6]^3*J[1,7]*Jsingleinv[2]*Jbarinv[3,6]
              - 2*Jsingle[6]^3*Jbar[2,6]*J[3,6]*J[1,7]*Jbarinv[0,6]*Jinv[1,6]*Jinv[2,6]*Jbarinv[3,6]
              - Jbarinv[0,6]*Jbarinv[0,42]
                * ( -(q^5*thetaPart[7](q^13,q^6;q)) + q*thetaPart[7](q^13,q^2;q) )
          rhs = -(Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*J[12,28]))",
       60},
      // The j(-q^2;q^16) bracket carries the factor q forced by the
      // odd-spin Appell form (1 - q + qM): the printed statement drops it.
      {"section6_level23OddSpinFirstQuadThetaId", "theta identity, 2/3-level odd spin",
       R"(identity section6_level23OddSpinFirstQuadThetaId
          lhs = -(j(-q^10;q^16)*( q*Jsingle[12]^3*Jbarinv[3,12]*Jsingleinv[4]
                  + 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                    *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3 ))
              + q*j(-q^2;q^16)*( J[3,6]^2*Jsingleinv[1]
                  + 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                    *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3 )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^8*thetaPart[4](-q^26,-q^13;q^4)
                  - q^5*thetaPart[4](-q^26,-q^9;q^4)
                  - q^14*thetaPart[4](-q^34,-q^15;q^4)
                  + q^9*thetaPart[4](-q^34,-q^11;q^4) )
          rhs = 3*q^2*Jsingle[3]*Jsingle[12]^3*Jsingleinv[4]*Jsingleinv[6]^2*j(-q^2;q^16))",
       60},
      {"section6_level23OddSpinSecondQuadThetaId", "theta identity, 2/3-level odd spin",
       R"(identity section6_level23OddSpinSecondQuadThetaId
          lhs = j(-q^10;q^16)*( J[3,6]^2*Jsingleinv[1]
                  + 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                    *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3 )
              - q*j(-q^2;q^16)*( q*Jsingle[12]^3*Jbarinv[3,12]*Jsingleinv[4]
                  + 1/2*q^(-1)*Jsingle[3]*Jsingle[6]*Jsingle[8]*Jsingle[12]^3
                    *Jsingleinv[2]*Jsingleinv[4]*Jsingleinv[24]^3 )
              - Jbarinv[0,12]*Jbarinv[0,48]
                * ( q^9*thetaPart[4](-q^26,-q^15;q^4)
                  - q^3*thetaPart[4](-q^26,-q^7;q^4)
                  - q^16*thetaPart[4](-q^34,-q^17;q^4)
                  + q^6*thetaPart[4](-q^34,-q^9;q^4) )
          rhs = 3*q*Jsingle[3]*Jsingle[12]^3*Jsingleinv[4]*Jsingleinv[6]^2*j(-q^10;q^16))",
       60},

      // ----- Hecke splits f_{n,n,1} = h - theta/(Jbar Jbar) -----

      {"hm_heckeSplit_n5", "f_{5,5,1} expansion into Appell plus theta parts",
       R"(identity hm_heckeSplit_n5 params s in 0..3 t in 1..2
          lhs = f[5,5,1](q^(4*s+7),q^(2*t);q)
          rhs = hPart[5](q^(4*s+7),q^(2*t);q)
              - Jbarinv[0,4]*Jbarinv[0,20]*thetaPart[5](q^(4*s+7),q^(2*t);q))",
       60},
      {"hm_heckeSplit_n7", "f_{7,7,1} expansion into Appell plus theta parts",
       R"(identity hm_heckeSplit_n7 params s in 0..3 t in 2..6 skip 4
          lhs = f[7,7,1](q^(6*s+10),q^t;q)
          rhs = hPart[7](q^(6*s+10),q^t;q)
              - Jbarinv[0,6]*Jbarinv[0,42]*thetaPart[7](q^(6*s+10),q^t;q))",
       60},
      // t = 6s+11 makes the first Appell argument of h equal -1 at base
      // exponent 0 (a genuine pole of m), so those non-generic pairs are
      // excluded from the sweep.
      {"hm_heckeSplit_n4", "f_{4,4,1} expansion into Appell plus theta parts",
       R"(identity hm_heckeSplit_n4 params s in 0..2 t in 7..15 skip 8,10,11,12,14
          lhs = f[4,4,1](-q^(6*s+23),-q^t;q^4)
          rhs = hPart[4](-q^(6*s+23),-q^t;q^4)
              - Jbarinv[0,12]*Jbarinv[0,48]*thetaPart[4](-q^(6*s+23),-q^t;q^4))",
       60},

      // ----- quasi-periodicity -----

      {"quasiPeriodicity_even_p2j1", "quasi-periodic relation for even spin",
       R"(identity quasiPeriodicity_even_p2j1 params t in 0..3 s in 0..0 r in 0..1
          lhs = quasiPeriodDelta[even](2,1,t,s,r)
          rhs = 0)",
       60},
      {"quasiPeriodicity_even_p3j1", "quasi-periodic relation for even spin",
       R"(identity quasiPeriodicity_even_p3j1 params t in 0..3 s in 0..0 r in 0..2
          lhs = quasiPeriodDelta[even](3,1,t,s,r)
          rhs = 0)",
       60},
      {"quasiPeriodicity_even_p3j2", "quasi-periodic relation for even spin",
       R"(identity quasiPeriodicity_even_p3j2 params t in 0..3 s in 0..1 r in 0..3
          lhs = quasiPeriodDelta[even](3,2,t,s,r)
          rhs = 0)",
       60},
      {"quasiPeriodicity_odd_p2j1", "quasi-periodic relation for odd spin",
       R"(identity quasiPeriodicity_odd_p2j1 params t in 0..3 s in 0..0 r in 0..1
          lhs = quasiPeriodDelta[odd](2,1,t,s,r)
          rhs = 0)",
       60},
      {"quasiPeriodicity_odd_p3j1", "quasi-periodic relation for odd spin",
       R"(identity quasiPeriodicity_odd_p3j1 params t in 0..3 s in 0..0 r in 0..2
          lhs = quasiPeriodDelta[odd](3,1,t,s,r)
          rhs = 0)",
       60},
      {"quasiPeriodicity_odd_p3j2", "quasi-periodic relation for odd spin",
       R"(identity quasiPeriodicity_odd_p3j2 params t in 0..3 s in 0..1 r in 0..2
          lhs = quasiPeriodDelta[odd](3,2,t,s,r)
          rhs = 0)",
       60},

      // ----- section 9: shared functional equations -----

      {"section9_level12FuncEqn_F", "F satisfies the 1/2-level functional equation",
       R"(identity section9_level12FuncEqn_F params r in 0..3
          lhs = ( -(q^(17+3*r)*f[5,5,1](q^(4*r+27),q^4;q)) + q^(6+r)*f[5,5,1](q^(4*r+27),q^2;q) )
              - q^(12+4*r)*( -(q^(2+3*r)*f[5,5,1](q^(4*r+7),q^4;q)) + q^(1+r)*f[5,5,1](q^(4*r+7),q^2;q) )
          rhs = -((-1)^r*q^(10-3*binom(r,2)-r)*j(q^(r+3);q^5)
                * ( q^(2+3*r)*sum(u,0,4,q^(-2*u^2-u-4*u*r))
                  - q^(1+r)*sum(u,0,4,q^(-2*u^2-3*u-4*u*r)) )))",
       60},
      {"section9_level12FuncEqn_G", "G satisfies the 1/2-level functional equation",
       R"(identity section9_level12FuncEqn_G params r in 0..3
          lhs = ( (-1)^(r+5)*j(q^(r+8);q^5)
                  * ( q^(binom(r+6,2))*1/2*mu2(q)
                    + q^(-3*binom(r+5,2))*sum(k,0,2*r+9,(-1)^k*q^((2*r+10)*k-binom(k+1,2))) )
                - (-1)^(r+5)*(-q)^(binom(r+6,2))*1/2
                  *Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j((-q)^(r+8);-q^5) )
              - q^(12+4*r)*( (-1)^r*j(q^(r+3);q^5)
                  * ( q^(binom(r+1,2))*1/2*mu2(q)
                    + q^(-3*binom(r,2))*sum(k,0,2*r-1,(-1)^k*q^(2*r*k-binom(k+1,2))) )
                - (-1)^r*(-q)^(binom(r+1,2))*1/2
                  *Jsingle[1]^3*Jsingleinv[2]*Jsingleinv[4]*j((-q)^(r+3);-q^5) )
          rhs = -((-1)^r*q^(10-3*binom(r,2)-r)*j(q^(r+3);q^5)
                * ( q^(2+3*r)*sum(u,0,4,q^(-2*u^2-u-4*u*r))
                  - q^(1+r)*sum(u,0,4,q^(-2*u^2-3*u-4*u*r)) )))",
       60},
      {"section9_level13FirstPairFuncEqn_F", "F satisfies the 1/3-level functional equation",
       R"(identity section9_level13FirstPairFuncEqn_F params r in 0..3
          lhs = ( -(q^(31+4*r)*f[7,7,1](q^(6*r+52),q^5;q)) + q^(16+2*r)*f[7,7,1](q^(6*r+52),q^3;q) )
              - q^(24+6*r)*( -(q^(3+4*r)*f[7,7,1](q^(6*r+10),q^5;q)) + q^(2+2*r)*f[7,7,1](q^(6*r+10),q^3;q) )
          rhs = -((-1)^r*q^(-5*binom(r,2)+23)*j(q^(r+4);q^7)
                * ( q^(1+2*r)*sum(u,0,6,q^(-3*u^2-2*u-6*u*r))
                  - sum(u,0,6,q^(-3*u^2-4*u-6*u*r)) )))",
       60},
      {"section9_level13FirstPairFuncEqn_G", "G satisfies the 1/3-level functional equation",
       R"(identity section9_level13FirstPairFuncEqn_G params r in 0..3
          lhs = ( (-1)^(r+7)*j(q^(r+11);q^7)
                  * ( q^(binom(r+8,2))*q*omega3(-q)
                    + q^(-5*binom(r+7,2))*sum(k,0,r+6,q^(6*k*(r+7)-6*binom(k+1,2))*(q^k - q^(-k+2*r+13))) )
                - q^(5*(r+7)^2-3*(r+7)+1)*Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*j(q^(120+16*r);q^28) )
              - q^(24+6*r)*( (-1)^r*j(q^(r+4);q^7)
                  * ( q^(binom(r+1,2))*q*omega3(-q)
                    + q^(-5*binom(r,2))*sum(k,0,r-1,q^(6*k*r-6*binom(k+1,2))*(q^k - q^(-k+2*r-1))) )
                - q^(5*r^2-3*r+1)*Jsingle[1]^3*Jsingle[4]*Jsingleinv[2]^3*j(q^(8+16*r);q^28) )
          rhs = -((-1)^r*q^(-5*binom(r,2)+23)*j(q^(r+4);q^7)
                * ( q^(1+2*r)*sum(u,0,6,q^(-3*u^2-2*u-6*u*r))
                  - sum(u,0,6,q^(-3*u^2-4*u-6*u*r)) )))",
       60},
      {"section9_level23FirstQuad_sEvenFuncEqn_F", "F satisfies the 2/3-level functional equation",
       R"(identity section9_level23FirstQuad_sEvenFuncEqn_F params r in 0..3
          lhs = ( q^(39+8*r)*f[4,4,1](-q^(71+12*r),-q^13;q^4)
                - q^(21+4*r)*f[4,4,1](-q^(71+12*r),-q^9;q^4)
                - q^(45+8*r)*f[4,4,1](-q^(79+12*r),-q^15;q^4)
                + q^(25+4*r)*f[4,4,1](-q^(79+12*r),-q^11;q^4) )
              - q^(27+12*r)*( q^(7+8*r)*f[4,4,1](-q^(23+12*r),-q^13;q^4)
                - q^(5+4*r)*f[4,4,1](-q^(23+12*r),-q^9;q^4)
                - q^(13+8*r)*f[4,4,1](-q^(31+12*r),-q^15;q^4)
                + q^(9+4*r)*f[4,4,1](-q^(31+12*r),-q^11;q^4) )
          rhs = -(q^(25+4*r)*j(-q^(7+12*r);q^16)
                * ( q^(4*r+2)*sum(u,0,3,q^(-6*u^2-12*u*r-4*u))
                  - sum(u,0,3,q^(-6*u^2-12*u*r-8*u)) ))
              + q^(21+4*r)*j(-q^(15+12*r);q^16)
                * ( q^(4*r+4)*sum(u,0,3,q^(-6*u^2-12*u*r-10*u))
                  - sum(u,0,3,q^(-6*u^2-12*u*r-14*u)) ))",
       60},
      {"section9_level23FirstQuad_sEvenFuncEqn_G", "G satisfies the 2/3-level functional equation",
       R"(identity section9_level23FirstQuad_sEvenFuncEqn_G params r in 0..3
          lhs = ( q^(7+16*(r+4))*j(-q^(23+12*(r+4));q^16)
                  * ( q^(2*(r+4)+12*binom(r+4,2))*q^2*omega3(-q^2)
                    + sum(k,0,r+3,q^(12*(r+4)*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*(r+4)-2))) )
                - q^(17+16*(r+4))*j(-q^(31+12*(r+4));q^16)
                  * ( 1 - q^(4*(r+4))*( q^(4*(r+4)+12*binom(r+4,2))*1/2*f3(q^4)
                      + sum(k,0,r+3,q^(12*(r+4)*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*(r+4)-4))) ) )
                - (-1)^(r+4)*q^(binom(2*(r+4),2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                  *j(-q^(1+4*(r+4));q^16) )
              - q^(27+12*r)*( q^(7+16*r)*j(-q^(23+12*r);q^16)
                  * ( q^(2*r+12*binom(r,2))*q^2*omega3(-q^2)
                    + sum(k,0,r-1,q^(12*r*k-12*binom(k+1,2))*(q^(2*k)-q^(-2*k+4*r-2))) )
                - q^(17+16*r)*j(-q^(31+12*r);q^16)
                  * ( 1 - q^(4*r)*( q^(4*r+12*binom(r,2))*1/2*f3(q^4)
                      + sum(k,0,r-1,q^(12*r*k-12*binom(k+1,2))*(q^(4*k)-q^(-4*k+8*r-4))) ) )
                - (-1)^r*q^(binom(2*r,2)+2)*1/2*Jsingle[1]^2*Jsingle[2]*Jsingleinv[4]^2
                  *j(-q^(1+4*r);q^16) )
          rhs = -(q^(25+4*r)*j(-q^(7+12*r);q^16)
                * ( q^(4*r+2)*sum(u,0,3,q^(-6*u^2-12*u*r-4*u))
                  - sum(u,0,3,q^(-6*u^2-12*u*r-8*u)) ))
              + q^(21+4*r)*j(-q^(15+12*r);q^16)
                * ( q^(4*r+4)*sum(u,0,3,q^(-6*u^2-12*u*r-10*u))
                  - sum(u,0,3,q^(-6*u^2-12*u*r-14*u)) ))",
       60},
  };
  return entries;
}

}  // namespace qseries

#endif  // QSERIES_CATALOG_ENTRIES_HPP_
