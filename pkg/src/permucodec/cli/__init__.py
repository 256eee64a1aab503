from permucodec.cli.commands import CodecOptions, build_message, cmd_decode, cmd_encode, cmd_info, decode_message
from permucodec.cli.framing import FORMAT_VERSION, MAGIC, Message, Mode
