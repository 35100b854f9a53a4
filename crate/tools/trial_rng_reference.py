"""Reference implementation of the seeded trial generator used by
`detident fuzz`, written from the documented algorithm only.

Usage: python3 trial_rng_reference.py SEED STREAM COUNT [BOUND]
prints COUNT integers uniform in [-BOUND, BOUND] (default 9).
"""
import struct
import sys

M64=(1<<64)-1
def seed_from_u64(state):
    MUL=6364136223846793005; INC=11634580027462260723
    out=b''
    for _ in range(8):
        state=(state*MUL+INC)&M64
        xs=(((state>>18)^state)>>27)&0xffffffff
        rot=state>>59
        x=((xs>>rot)|(xs<<((32-rot)&31)))&0xffffffff
        out+=struct.pack('<I',x)
    return out
def rotl(v,c): return ((v<<c)|(v>>(32-c)))&0xffffffff
def qr(s,a,b,c,d):
    s[a]=(s[a]+s[b])&0xffffffff; s[d]=rotl(s[d]^s[a],16)
    s[c]=(s[c]+s[d])&0xffffffff; s[b]=rotl(s[b]^s[c],12)
    s[a]=(s[a]+s[b])&0xffffffff; s[d]=rotl(s[d]^s[a],8)
    s[c]=(s[c]+s[d])&0xffffffff; s[b]=rotl(s[b]^s[c],7)
def block(key,counter,stream):
    const=[0x61707865,0x3320646e,0x79622d32,0x6b206574]
    k=list(struct.unpack('<8I',key))
    st=const+k+[counter&0xffffffff,counter>>32,stream&0xffffffff,stream>>32]
    w=st[:]
    for _ in range(4):
        qr(w,0,4,8,12);qr(w,1,5,9,13);qr(w,2,6,10,14);qr(w,3,7,11,15)
        qr(w,0,5,10,15);qr(w,1,6,11,12);qr(w,2,7,8,13);qr(w,3,4,9,14)
    return [(a+b)&0xffffffff for a,b in zip(w,st)]
class G:
    def __init__(s,seed,stream):
        s.key=seed_from_u64(seed); s.stream=stream; s.ctr=0; s.buf=[]
    def u32(s):
        if not s.buf: s.buf=block(s.key,s.ctr,s.stream); s.ctr+=1
        return s.buf.pop(0)
    def u64(s):
        lo=s.u32(); hi=s.u32(); return lo|(hi<<32)
    def below(s,span):
        zone=(M64//span)*span
        while True:
            x=s.u64()
            if x<zone: return x%span
    def int_in(s,lo,hi): return lo+s.below(hi-lo+1)

if __name__ == "__main__":
    seed, stream, count = (int(x) for x in sys.argv[1:4])
    bound = int(sys.argv[4]) if len(sys.argv) > 4 else 9
    g = G(seed, stream)
    print(" ".join(str(g.int_in(-bound, bound)) for _ in range(count)))
